#include "beilab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "beilab/canonical.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph_io.hpp"
#include "beilab/homology.hpp"
#include "beilab/primes.hpp"
#include "beilab/report.hpp"

namespace beilab {

namespace {

std::uint64_t side_mask(std::string_view split, char side) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < split.size(); ++k)
    if (split[k] == side || split[k] == 'b') m |= std::uint64_t{1} << k;
  return m;
}

std::string swapped(std::string s) {
  for (char& c : s) c = c == '1' ? '2' : c == '2' ? '1' : c;
  return s;
}

std::string descriptor(std::uint64_t code, int edge_count) {
  static constexpr char kDigit[] = {'1', '2', 'b'};
  std::string s(edge_count, '1');
  for (int k = 0; k < edge_count; ++k, code /= 3) s[k] = kDigit[code % 3];
  return s;
}

std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

const char* mode_name(SplitMode m) { return m == SplitMode::all ? "all" : "sample"; }

std::vector<Graph> sweep_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n)
    for (Graph& g : enumerate_connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

// Runs task(i) for i in [0, count) on `jobs` threads; each index exactly once.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(count, 1 << 10))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

// Append-only JSON-lines store. The first line describes the sweep; later lines are
// graph records {graph6, reg, height}, split records (a SweepCase) and completion
// markers {graph6, done, cases}. Duplicates are harmless and a torn final line is skipped.
class ResumeCache {
 public:
  ResumeCache(const std::string& path, json header) : path_(path), header_(std::move(header)) {
    if (path_.empty()) return;
    bool needs_newline = false;
    bool have_header = false;
    if (std::ifstream in(path_); in) {
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        needs_newline = in.eof();
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
          std::cerr << "beilab: skipping unreadable cache line " << line_no << " in " << path_ << "\n";
          continue;
        }
        if (!have_header) {
          if (j != header_)
            throw ConfigError("cache " + path_ + " was written by a different sweep: " + j.dump());
          have_header = true;
          continue;
        }
        load(j);
      }
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw ConfigError("cannot open cache " + path_ + " for appending");
    if (needs_newline) out_ << '\n';
    if (!have_header) write(header_);
  }

  bool enabled() const { return !path_.empty(); }

  const std::pair<int, int>* graph(const std::string& g6) const {
    auto it = graphs_.find(g6);
    return it == graphs_.end() ? nullptr : &it->second;
  }
  const SweepCase* split(const std::string& g6, const std::string& split) const {
    auto it = cases_.find({g6, split});
    return it == cases_.end() ? nullptr : &it->second;
  }

  void write(const json& j) {
    if (!enabled()) return;
    std::lock_guard lock(mu_);
    out_ << j.dump() << '\n';
    out_.flush();
    if (!out_) throw ConfigError("write to cache " + path_ + " failed");
  }

 private:
  void load(const json& j) {
    try {
      if (j.contains("done")) return;
      if (j.contains("split")) {
        SweepCase c = sweep_case_from_json(j);
        cases_[{c.graph6, c.split}] = c;
      } else {
        graphs_[j.at("graph6").get<std::string>()] = {j.at("reg").get<int>(), j.at("height").get<int>()};
      }
    } catch (const json::exception&) {
      throw ConfigError("malformed record in cache " + path_ + ": " + j.dump());
    }
  }

  std::string path_;
  json header_;
  std::ofstream out_;
  std::mutex mu_;
  std::map<std::string, std::pair<int, int>> graphs_;
  std::map<std::pair<std::string, std::string>, SweepCase> cases_;
};

json cache_header(const std::string& command, const SweepParams& p) {
  json h = {{"cache", "beilab-sweep"}, {"command", command}, {"p", p.prime}};
  if (command == "check-subadditivity") {
    h["splits"] = mode_name(p.splits);
    if (p.splits == SplitMode::sample) {
      h["samples"] = p.samples;
      h["seed"] = p.seed;
    }
  }
  return h;
}

struct GraphWork {
  Graph graph;
  std::string graph6;
  std::vector<std::string> splits;
  std::vector<SweepCase> results;
  int reg = 0, height = 0;
  std::atomic<std::size_t> pending{0};
};

SweepReport run_sweep(const std::string& command, const SweepParams& params, bool with_splits) {
  if (!is_prime(params.prime)) throw PreconditionError("characteristic must be prime");
  if (params.jobs < 1) throw PreconditionError("jobs must be at least 1");
  if (params.max_n < 2) throw PreconditionError("--max-n must be at least 2");
  const auto start = std::chrono::steady_clock::now();

  ResumeCache cache(params.resume_path, cache_header(command, params));
  RegularityMemo memo(params.prime);

  const std::vector<Graph> graphs = sweep_graphs(params.max_n);
  std::vector<GraphWork> work(graphs.size());
  // item (g, -1) is the per-graph record; (g, k) is split k of graph g
  std::vector<std::pair<std::size_t, std::ptrdiff_t>> items;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    GraphWork& w = work[gi];
    w.graph = graphs[gi];
    w.graph6 = emit_graph6(w.graph);
    if (with_splits)
      w.splits = params.splits == SplitMode::all
                     ? canonical_splits(w.graph.edge_count())
                     : sampled_splits(w.graph.edge_count(), params.samples, params.seed, w.graph6);
    w.results.resize(w.splits.size());
    std::size_t pending = 0;
    if (const auto* rec = cache.graph(w.graph6)) {
      std::tie(w.reg, w.height) = *rec;
    } else {
      items.emplace_back(gi, -1);
      ++pending;
    }
    for (std::size_t k = 0; k < w.splits.size(); ++k) {
      if (const SweepCase* c = cache.split(w.graph6, w.splits[k])) {
        w.results[k] = *c;
      } else {
        items.emplace_back(gi, static_cast<std::ptrdiff_t>(k));
        ++pending;
      }
    }
    w.pending = pending;
  }

  parallel_for(items.size(), params.jobs, [&](std::size_t i) {
    auto [gi, k] = items[i];
    GraphWork& w = work[gi];
    if (k < 0) {
      w.reg = memo.regularity(w.graph);
      w.height = height(w.graph);
      cache.write(json{{"graph6", w.graph6}, {"reg", w.reg}, {"height", w.height}});
    } else {
      w.results[k] = evaluate_split(w.graph, w.splits[k], memo);
      cache.write(to_json(w.results[k]));
    }
    if (w.pending.fetch_sub(1) == 1 && with_splits)
      cache.write(json{{"graph6", w.graph6}, {"done", true}, {"cases", w.splits.size()}});
  });

  SweepReport report;
  report.command = command;
  report.params = params;
  report.graph_count = work.size();
  for (GraphWork& w : work) {
    GraphVerdict v{w.graph6, w.graph.order(), w.graph.edge_count(), w.reg, w.height,
                   with_splits ? w.splits.size() : 1, 0};
    if (!v.reg_le_height()) report.violations.push_back({"regLeHeight", {w.graph6, "", w.reg, w.height, 0, false}});
    for (const SweepCase& c : w.results)
      if (!c.holds) {
        ++v.violations;
        report.violations.push_back({"subadditivity", c});
      }
    report.case_count += with_splits ? w.splits.size() : 1;
    report.graphs.push_back(std::move(v));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

bool is_canonical_split(std::string_view split) {
  if (split.size() > 64) return false;
  for (char c : split)
    if (c != '1' && c != '2' && c != 'b') return false;
  const std::uint64_t h1 = side_mask(split, '1');
  const std::uint64_t h2 = side_mask(split, '2');
  return h1 != 0 && h2 != 0 && h1 <= h2;
}

std::vector<std::string> canonical_splits(int edge_count) {
  if (edge_count > 20) throw SizeError("exhaustive splits need at most 20 edges");
  std::vector<std::string> out;
  const std::uint64_t total = pow3(edge_count);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::string s = descriptor(code, edge_count);
    if (is_canonical_split(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sampled_splits(int edge_count, std::uint64_t samples, std::uint64_t seed,
                                        std::string_view graph6) {
  if (edge_count > 40) throw SizeError("sampled splits need at most 40 edges");
  std::mt19937_64 rng(seed ^ fnv1a(graph6));
  std::uniform_int_distribution<std::uint64_t> digit(0, 2);
  std::set<std::string> picked;
  for (std::uint64_t t = 0; t < samples; ++t) {
    std::string s(edge_count, '1');
    for (char& c : s) c = "12b"[digit(rng)];
    if (!is_canonical_split(s)) s = swapped(std::move(s));
    if (is_canonical_split(s)) picked.insert(std::move(s));
  }
  return {picked.begin(), picked.end()};
}

std::pair<Graph, Graph> split_graphs(const Graph& g, std::string_view split) {
  const auto edges = g.edges();
  if (split.size() != edges.size())
    throw PreconditionError("split has " + std::to_string(split.size()) + " entries but G has " +
                            std::to_string(edges.size()) + " edges");
  Graph h1(g.order()), h2(g.order());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const char c = split[k];
    if (c != '1' && c != '2' && c != 'b') throw PreconditionError("split entries must be '1', '2' or 'b'");
    if (c != '2') h1.add_edge(edges[k].first, edges[k].second);
    if (c != '1') h2.add_edge(edges[k].first, edges[k].second);
  }
  return {h1, h2};
}

SweepCase evaluate_split(const Graph& g, std::string_view split, RegularityMemo& memo) {
  auto [h1, h2] = split_graphs(g, split);
  SweepCase c;
  c.graph6 = emit_graph6(g);
  c.split = std::string(split);
  c.reg_g = memo.regularity(g);
  c.reg_h1 = memo.regularity(h1);
  c.reg_h2 = memo.regularity(h2);
  c.holds = c.reg_g <= c.reg_h1 + c.reg_h2;
  return c;
}

SweepReport check_height(const SweepParams& params) {
  if (params.max_n > kMaxHeightSweepOrder)
    throw SizeError("check-height supports --max-n <= " + std::to_string(kMaxHeightSweepOrder));
  return run_sweep("check-height", params, false);
}

SweepReport check_subadditivity(const SweepParams& params) {
  const int cap = params.splits == SplitMode::all ? kMaxExhaustiveSplitOrder : kMaxSampledSplitOrder;
  if (params.max_n > cap)
    throw SizeError(std::string("check-subadditivity with --splits ") + mode_name(params.splits) +
                    " supports --max-n <= " + std::to_string(cap));
  return run_sweep("check-subadditivity", params, true);
}

}  // namespace beilab
