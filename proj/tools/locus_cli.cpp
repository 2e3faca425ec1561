#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "locus/locus_index.hpp"
#include "locus/oracle.hpp"

using namespace locus;

namespace {

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

LocusIndex load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LocusIndex::load(in);
}

std::vector<Direction> directions(const std::string& flag) {
  if (flag == "left") return {Direction::kLeft};
  if (flag == "right") return {Direction::kRight};
  return {Direction::kLeft, Direction::kRight};
}

void print_stats(const LocusIndex& idx, const std::vector<Direction>& dirs) {
  const IndexStats s = idx.stats();
  std::printf("n = %llu\n", static_cast<unsigned long long>(s.n));
  std::printf("nodes = %llu\n", static_cast<unsigned long long>(s.nodes));
  for (Direction d : dirs) {
    const int k = dir_index(d);
    const auto& f = s.forest[k];
    const char* name = to_string(d).data();
    std::printf("[%s]\n", name);
    std::printf("irreducible positions = %llu\n", static_cast<unsigned long long>(s.irreducible_count[k]));
    std::printf("irreducible LCP sum = %llu\n", static_cast<unsigned long long>(s.irreducible_sum[k]));
    std::printf("heavy paths = %llu\n", static_cast<unsigned long long>(f.paths));
    std::printf("owned ahat arrays = %llu (root %llu, slot %llu, fallback %llu)\n",
                static_cast<unsigned long long>(f.owned_arrays), static_cast<unsigned long long>(f.root_arrays),
                static_cast<unsigned long long>(f.slot_arrays), static_cast<unsigned long long>(f.fallback_arrays));
    std::printf("total ahat bits = %llu\n", static_cast<unsigned long long>(f.owned_bits));
    std::printf("shared ahat paths = %llu (heavy %llu, light %llu, short %llu)\n",
                static_cast<unsigned long long>(f.shared_paths), static_cast<unsigned long long>(f.case_heavy),
                static_cast<unsigned long long>(f.case_light), static_cast<unsigned long long>(f.case_small));
    std::printf("max reuse slots per tree = %llu\n", static_cast<unsigned long long>(f.max_slots_per_tree));
    std::printf("max marked list = %llu\n", static_cast<unsigned long long>(f.max_marked_list));
  }
  std::printf("words = %llu\n", static_cast<unsigned long long>(s.words));
  std::printf("words per symbol = %.2f\n", s.words_per_symbol);
}

int cmd_build(const std::string& text_path, const std::string& out_path, bool no_share,
              const std::vector<Direction>& dirs) {
  const auto raw = read_file(text_path);
  const auto t0 = std::chrono::steady_clock::now();
  const auto idx = LocusIndex::build(raw, {!no_share});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  idx.save(out);
  print_stats(idx, dirs);
  std::printf("build seconds = %.3f\n", secs);
  return 0;
}

int cmd_query(const std::string& index_path, Pos p, Pos q) {
  const auto idx = load_index(index_path);
  const NodeId v = idx.locus(p, q);
  const Label l = idx.label(v);
  std::printf("node=%u depth=%u start=%u length=%u\n", v, idx.string_depth(v), l.start, l.length);
  return 0;
}

int cmd_verify(const std::string& text_path, std::size_t n_cap, std::uint64_t seed, const std::vector<Direction>& dirs) {
  const auto raw = read_file(text_path);
  const auto idx = LocusIndex::build(raw);
  const auto text = idx.text().bytes();
  const auto& sa = idx.arrays().sa;
  const Pos n = idx.size();
  std::uint64_t checked = 0;
  auto fail = [](const std::string& what) {
    std::fprintf(stderr, "FAIL %s\n", what.c_str());
    return 1;
  };

  if (n <= n_cap) {
    const oracle::NaiveModel m(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
    for (Pos p = 0; p < n; ++p) {
      for (Pos q = p; q < n; ++q) {
        const NodeId v = idx.locus(p, q);
        const oracle::NodeSig got{idx.string_depth(v), idx.tree().lo(v), idx.tree().hi(v)};
        if (!(got == m.locus(p, q))) return fail("locus p=" + std::to_string(p) + " q=" + std::to_string(q));
        for (Direction d : dirs) {
          if (idx.count_branching_at_least(p, q - p + 1, d) != m.count_at_least(p, q - p + 1, d)) {
            return fail("count p=" + std::to_string(p) + " q=" + std::to_string(q) + " dir=" + std::string(to_string(d)));
          }
        }
        ++checked;
      }
      for (Direction d : dirs) {
        if (idx.store(d).is_irreducible(p) && idx.store(d).bits_of(p) != m.bp(p, d)) {
          return fail("b_p p=" + std::to_string(p) + " dir=" + std::string(to_string(d)));
        }
      }
    }
    std::printf("exhaustive: %llu substrings, all match\n", static_cast<unsigned long long>(checked));
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 100000; ++i) {
      const Pos p = static_cast<Pos>(rng() % n);
      const Pos q = p + static_cast<Pos>(rng() % (n - p));
      if (idx.locus(p, q) != oracle::descend_skip(idx.tree(), text, sa, p, q)) {
        return fail("locus p=" + std::to_string(p) + " q=" + std::to_string(q));
      }
      ++checked;
    }
    std::printf("sampled: %llu substrings, all match\n", static_cast<unsigned long long>(checked));
  }
  std::printf("PASS\n");
  return 0;
}

struct Bucket {
  std::string name;
  std::vector<std::pair<Pos, Pos>> queries;
};

// Amortized nanoseconds per query for each batch of `batch` queries.
template <class F>
std::vector<double> time_batches(const std::vector<std::pair<Pos, Pos>>& qs, std::size_t batch, F&& run) {
  std::vector<double> out;
  volatile NodeId sink = 0;
  for (std::size_t i = 0; i + batch <= qs.size(); i += batch) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t j = i; j < i + batch; ++j) sink = sink + run(qs[j].first, qs[j].second);
    const double ns = std::chrono::duration<double, std::nano>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(ns / static_cast<double>(batch));
  }
  return out;
}

int cmd_bench(const std::string& index_path, std::size_t count, const std::string& profile, std::uint64_t seed,
              unsigned threads) {
  const auto idx = load_index(index_path);
  const Pos n = idx.size();
  std::printf("bucket,length,queries,mean_ns,median_ns,p99_ns,naive_mean_ns\n");
  if (count == 0) return 0;
  std::mt19937_64 rng(seed);
  std::vector<Bucket> buckets;
  auto fixed = [&](Pos len, std::string label) {
    Bucket b{std::move(label), {}};
    len = std::clamp<Pos>(len, 1, n);
    for (std::size_t i = 0; i < count; ++i) {
      const Pos p = static_cast<Pos>(rng() % (n - len + 1));
      b.queries.emplace_back(p, p + len - 1);
    }
    return b;
  };
  if (profile == "uniform") {
    Bucket b{"uniform", {}};
    for (std::size_t i = 0; i < count; ++i) {
      const Pos p = static_cast<Pos>(rng() % n);
      b.queries.emplace_back(p, p + static_cast<Pos>(rng() % (n - p)));
    }
    buckets.push_back(std::move(b));
  } else if (profile.rfind("fixed:", 0) == 0) {
    buckets.push_back(fixed(static_cast<Pos>(std::stoul(profile.substr(6))), profile.substr(6)));
  } else if (profile == "buckets") {
    buckets.push_back(fixed(1, "1"));
    buckets.push_back(fixed(16, "16"));
    buckets.push_back(fixed(n / 4, "n/4"));
    buckets.push_back(fixed(n / 2, "n/2"));
  } else {
    throw std::runtime_error("unknown profile " + profile);
  }

  const auto text = idx.text().bytes();
  const auto& sa = idx.arrays().sa;
  const std::size_t batch = std::max<std::size_t>(1, std::min<std::size_t>(256, count / 8));
  for (const auto& b : buckets) {
    // Warm-up pass.
    time_batches(b.queries, batch, [&](Pos p, Pos q) { return idx.locus(p, q); });
    std::vector<std::vector<double>> per(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] { per[t] = time_batches(b.queries, batch, [&](Pos p, Pos q) { return idx.locus(p, q); }); });
    }
    for (auto& th : pool) th.join();
    std::vector<double> all;
    for (auto& v : per) all.insert(all.end(), v.begin(), v.end());
    std::sort(all.begin(), all.end());
    double mean = 0;
    for (double x : all) mean += x;
    mean /= static_cast<double>(std::max<std::size_t>(1, all.size()));
    const double median = all.empty() ? 0 : all[all.size() / 2];
    const double p99 = all.empty() ? 0 : all[std::min(all.size() - 1, all.size() * 99 / 100)];
    // The naive descent is slow for long substrings; time a bounded sample.
    std::vector<std::pair<Pos, Pos>> sample(b.queries.begin(), b.queries.begin() + std::min<std::size_t>(b.queries.size(), 2048));
    const auto naive = time_batches(sample, std::min(batch, sample.size()), [&](Pos p, Pos q) {
      return oracle::descend(idx.tree(), text, sa, p, q);
    });
    double naive_mean = 0;
    for (double x : naive) naive_mean += x;
    naive_mean /= static_cast<double>(std::max<std::size_t>(1, naive.size()));
    const Pos len = b.queries.empty() ? 0 : b.queries.front().second - b.queries.front().first + 1;
    std::printf("%s,%s,%zu,%.1f,%.1f,%.1f,%.1f\n", b.name.c_str(), b.name == "uniform" ? "mixed" : std::to_string(len).c_str(),
                b.queries.size(), mean, median, p99, naive_mean);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-time suffix-tree locus index"};
  app.require_subcommand(1);
  std::string direction = "both";
  std::uint64_t seed = 1;
  std::size_t n_cap = 2000;
  unsigned threads = 1;
  app.add_option("--direction", direction, "Branching direction for stats and verify")
      ->check(CLI::IsMember({"left", "right", "both"}));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--n-cap", n_cap, "Largest text verified exhaustively");
  app.add_option("--threads", threads, "Reader threads for bench")->check(CLI::Range(1u, 256u));

  std::string text_path, index_path, out_path, profile = "buckets";
  Pos p = 0, q = 0;
  std::size_t count = 100000;
  bool no_share = false;

  auto* build = app.add_subcommand("build", "Build an index from a text file");
  build->add_option("text", text_path)->required();
  build->add_option("-o,--output", out_path)->required();
  build->add_flag("--no-share", no_share, "Give every heavy path its own sampled array");

  auto* query = app.add_subcommand("query", "Locus of s[p..q]");
  query->add_option("index", index_path)->required();
  query->add_option("p", p)->required();
  query->add_option("q", q)->required();

  auto* verify = app.add_subcommand("verify", "Check an index built from a text against brute force");
  verify->add_option("text", text_path)->required();

  auto* bench = app.add_subcommand("bench", "Query latency per length bucket (CSV)");
  bench->add_option("index", index_path)->required();
  bench->add_option("--queries", count, "Queries per bucket");
  bench->add_option("--profile", profile, "uniform, buckets, or fixed:<length>");

  auto* stats = app.add_subcommand("stats", "Structure statistics of an index");
  stats->add_option("index", index_path)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    const auto dirs = directions(direction);
    if (*build) return cmd_build(text_path, out_path, no_share, dirs);
    if (*query) return cmd_query(index_path, p, q);
    if (*verify) return cmd_verify(text_path, n_cap, seed, dirs);
    if (*bench) return cmd_bench(index_path, count, profile, seed, threads);
    if (*stats) {
      print_stats(load_index(index_path), dirs);
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
