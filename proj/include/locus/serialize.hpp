#pragma once

// Little-endian binary encoding for the index file. Sections are tagged,
// length-prefixed and CRC32-checked so that readers can skip unknown ones.

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace locus {

static_assert(std::endian::native == std::endian::little, "index file I/O assumes a little-endian host");

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Writer {
 public:
  void u8(std::uint8_t v) { raw(&v, 1); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void i32(std::int32_t v) { raw(&v, 4); }

  template <class T>
  void vec(const std::vector<T>& v) {
    static_assert(std::is_trivially_copyable_v<T>);
    u64(v.size());
    raw(v.data(), v.size() * sizeof(T));
  }

  void raw(const void* data, std::size_t len) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    buf_.insert(buf_.end(), p, p + len);
  }

  const std::vector<std::uint8_t>& bytes() const { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() { return scalar<std::uint8_t>(); }
  std::uint32_t u32() { return scalar<std::uint32_t>(); }
  std::uint64_t u64() { return scalar<std::uint64_t>(); }
  std::int32_t i32() { return scalar<std::int32_t>(); }

  template <class T>
  std::vector<T> vec() {
    static_assert(std::is_trivially_copyable_v<T>);
    const std::uint64_t count = u64();
    if (count > remaining() / sizeof(T)) throw FormatError("truncated array");
    std::vector<T> out(count);
    std::memcpy(out.data(), data_.data() + pos_, count * sizeof(T));
    pos_ += count * sizeof(T);
    return out;
  }

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }

 private:
  template <class T>
  T scalar() {
    if (remaining() < sizeof(T)) throw FormatError("truncated input");
    T v;
    std::memcpy(&v, data_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

std::uint32_t section_tag(const char (&name)[5]);

/// Whole-file container: magic, version, n, then sections.
class IndexFileWriter {
 public:
  IndexFileWriter(std::ostream& out, std::uint64_t n);
  void section(std::uint32_t tag, const Writer& payload);

 private:
  std::ostream& out_;
};

class IndexFileReader {
 public:
  explicit IndexFileReader(std::istream& in);

  std::uint64_t n() const { return n_; }
  /// Payload of the next section carrying `tag`, skipping others.
  std::span<const std::uint8_t> section(std::uint32_t tag);

 private:
  std::vector<std::uint8_t> file_;
  std::size_t pos_ = 0;
  std::uint64_t n_ = 0;
};

inline constexpr char kIndexMagic[8] = {'L', 'O', 'C', 'U', 'S', 'I', 'D', 'X'};
inline constexpr std::uint32_t kIndexVersion = 1;

}  // namespace locus
