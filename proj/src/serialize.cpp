#include "locus/serialize.hpp"

#include <algorithm>
#include <initializer_list>
#include <iterator>

#include <zlib.h>

namespace locus {

std::uint32_t section_tag(const char (&name)[5]) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(name[0])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(name[1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(name[2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(name[3])) << 24;
}

namespace {

std::uint32_t crc_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t done = 0;
  while (done < bytes.size()) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - done, 1u << 30));
    crc = crc32(crc, bytes.data() + done, chunk);
    done += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

IndexFileWriter::IndexFileWriter(std::ostream& out, std::uint64_t n) : out_(out) {
  Writer header;
  header.raw(kIndexMagic, sizeof(kIndexMagic));
  header.u32(kIndexVersion);
  header.u64(n);
  out_.write(reinterpret_cast<const char*>(header.bytes().data()), static_cast<std::streamsize>(header.bytes().size()));
}

void IndexFileWriter::section(std::uint32_t tag, const Writer& payload) {
  Writer head;
  head.u32(tag);
  head.u64(payload.bytes().size());
  Writer tail;
  tail.u32(crc_of(payload.bytes()));
  for (const Writer* part : std::initializer_list<const Writer*>{&head, &payload, &tail}) {
    out_.write(reinterpret_cast<const char*>(part->bytes().data()), static_cast<std::streamsize>(part->bytes().size()));
  }
  if (!out_) throw std::runtime_error("write failed");
}

IndexFileReader::IndexFileReader(std::istream& in)
    : file_(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()) {
  Reader r(file_);
  char magic[8];
  for (char& c : magic) c = static_cast<char>(r.u8());
  if (std::memcmp(magic, kIndexMagic, sizeof(magic)) != 0) throw FormatError("not an index file");
  if (const std::uint32_t version = r.u32(); version != kIndexVersion) {
    throw FormatError("unsupported index version " + std::to_string(version));
  }
  n_ = r.u64();
  pos_ = file_.size() - r.remaining();
}

std::span<const std::uint8_t> IndexFileReader::section(std::uint32_t tag) {
  while (pos_ < file_.size()) {
    Reader r(std::span<const std::uint8_t>(file_).subspan(pos_));
    const std::uint32_t found = r.u32();
    const std::uint64_t len = r.u64();
    if (len + 4 > r.remaining()) throw FormatError("truncated section");
    const std::size_t payload_at = pos_ + 12;
    auto payload = std::span<const std::uint8_t>(file_).subspan(payload_at, len);
    Reader crc_reader(std::span<const std::uint8_t>(file_).subspan(payload_at + len, 4));
    const std::uint32_t stored_crc = crc_reader.u32();
    pos_ = payload_at + len + 4;
    if (found != tag) continue;
    if (crc_of(payload) != stored_crc) throw FormatError("section checksum mismatch");
    return payload;
  }
  throw FormatError("missing section");
}

}  // namespace locus
