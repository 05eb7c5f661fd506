// Command-line front end: single-graph invariants and the verification sweeps.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "beilab/bounds.hpp"
#include "beilab/canonical.hpp"
#include "beilab/config.hpp"
#include "beilab/errors.hpp"
#include "beilab/graph_io.hpp"
#include "beilab/homology.hpp"
#include "beilab/initial_ideal.hpp"
#include "beilab/primes.hpp"
#include "beilab/report.hpp"
#include "beilab/sweep.hpp"

using namespace beilab;

namespace {

enum Exit { kHolds = 0, kViolation = 1, kOperational = 2 };

struct CommonFlags {
  std::optional<int> jobs, prime;
  std::optional<std::string> format;
  void attach(CLI::App* cmd, bool with_jobs) {
    cmd->add_option("--char", prime, "Field characteristic (prime)");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    if (with_jobs) cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
};

std::string read_stream(std::istream& in) {
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A literal graph, a file of graphs (one per line) or "-" for stdin.
std::vector<Graph> load_graphs(const std::string& input) {
  std::string text;
  if (input.empty() || input == "-") {
    text = read_stream(std::cin);
  } else if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    if (!in) throw ConfigError("cannot read " + input);
    text = read_stream(in);
  } else {
    return {parse_graph(input)};
  }
  std::vector<Graph> out;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) out.push_back(parse_graph(line));
  }
  if (out.empty()) throw ConfigError("no graphs in input");
  return out;
}

VertexSet parse_block(const std::string& text, const std::string& name) {
  VertexSet s;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1 || v > kMaxVertices)
      throw PreconditionError("--" + name + ": bad vertex '" + item + "'");
    s.insert(v - 1);
  }
  return s;
}

// Prints one record per graph: JSON lines, or CSV with a single header.
class Emitter {
 public:
  explicit Emitter(const std::string& format) : csv_(format == "csv") {}
  void emit(const json& record) {
    if (!csv_) {
      std::cout << record.dump() << '\n';
      return;
    }
    std::string text = csv_row(record);
    if (!header_done_) {
      header_done_ = true;
    } else {
      text = text.substr(text.find('\n') + 1);
    }
    std::cout << text;
  }

 private:
  bool csv_;
  bool header_done_ = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binomial edge ideal invariants, regularity and verification sweeps"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value config file (jobs, char, format)")->check(CLI::ExistingFile);

  std::string input;
  CommonFlags flags;

  auto* invariants = app.add_subcommand("invariants", "n, m, iv, c, eta, height, mixed cover, minimal primes");
  auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of R/J_G");
  bool betti = false;
  reg->add_flag("--betti", betti, "Include the graded Betti table");
  auto* bounds = app.add_subcommand("bounds", "reg next to every upper bound");
  auto* primes = app.add_subcommand("minimal-primes", "Cut sets and the heights of their primes");
  auto* decomp = app.add_subcommand("decomp-check", "Check a decomposition V(G) = A + B + C");
  std::string block_a, block_b, block_c;
  decomp->add_option("--A", block_a, "Comma-separated vertices")->required();
  decomp->add_option("--B", block_b, "Comma-separated vertices")->required();
  decomp->add_option("--C", block_c, "Comma-separated vertices")->required();
  for (auto* cmd : {invariants, reg, bounds, primes, decomp}) {
    cmd->add_option("input", input, "graph6 or \"n; i j; ...\", a file of graphs, or - for stdin");
    flags.attach(cmd, false);
  }

  SweepParams sweep;
  bool timing = false;
  auto* height_cmd = app.add_subcommand("check-height", "Sweep reg <= height over connected graphs");
  auto* subadd = app.add_subcommand("check-subadditivity", "Sweep reg(G) <= reg(H1) + reg(H2) over edge splits");
  std::string split_mode = "all";
  subadd->add_option("--splits", split_mode, "all or sample")->check(CLI::IsMember({"all", "sample"}));
  subadd->add_option("--samples", sweep.samples, "Splits drawn per graph in sample mode");
  subadd->add_option("--seed", sweep.seed, "Sampling seed");
  for (auto* cmd : {height_cmd, subadd}) {
    cmd->add_option("--max-n", sweep.max_n, "Largest vertex count")->required();
    cmd->add_option("--resume", sweep.resume_path, "JSON-lines cache to resume from and append to");
    cmd->add_flag("--timing", timing, "Add wall time to the report");
    flags.attach(cmd, true);
  }

  auto* enumerate = app.add_subcommand("enumerate", "Connected graphs on n vertices, one graph6 per line");
  int enum_n = 0;
  bool count_only = false;
  enumerate->add_option("--n", enum_n, "Vertex count (1..8)")->required();
  enumerate->add_flag("--count", count_only, "Print {n, count} only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kOperational;
  }

  try {
    std::optional<std::string> config_text;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      config_text = read_stream(in);
    }
    const Settings settings = resolve_settings({flags.jobs, flags.prime, flags.format}, process_env, config_text);
    Emitter out(settings.format);
    int status = kHolds;

    if (enumerate->parsed()) {
      const auto graphs = enumerate_connected_graphs(enum_n);
      if (count_only) {
        std::cout << json{{"n", enum_n}, {"count", graphs.size()}}.dump() << '\n';
      } else {
        for (const Graph& g : graphs) std::cout << emit_graph6(g) << '\n';
      }
      return kHolds;
    }

    if (height_cmd->parsed() || subadd->parsed()) {
      sweep.prime = settings.prime;
      sweep.jobs = settings.jobs;
      sweep.splits = split_mode == "all" ? SplitMode::all : SplitMode::sample;
      if (subadd->parsed() && sweep.splits == SplitMode::sample && sweep.samples == 0)
        throw PreconditionError("--splits sample needs --samples K with K >= 1");
      const SweepReport report = height_cmd->parsed() ? check_height(sweep) : check_subadditivity(sweep);
      const json j = to_json(report, timing);
      if (settings.format == "csv") {
        std::cout << csv_table(j["graphs"]);
      } else {
        std::cout << j.dump(2) << '\n';
      }
      std::cerr << report.command << ": " << report.graph_count << " graphs, " << report.case_count << " cases, "
                << report.violations.size() << " violations, " << report.wall_seconds << " s\n";
      return report.holds() ? kHolds : kViolation;
    }

    for (const Graph& g : load_graphs(input)) {
      if (invariants->parsed()) {
        out.emit(invariants_json(g));
      } else if (reg->parsed()) {
        json j = {{"graph6", emit_graph6(g)}, {"p", settings.prime}};
        if (betti) {
          if (g.order() > kMaxRegularityOrder) throw SizeError("regularity needs n <= 10");
          const BettiTable table = betti_table(initial_ideal(g), settings.prime);
          j["reg"] = table.regularity();
          j["betti"] = to_json(table)["betti"];
        } else {
          j["reg"] = reg_binomial_edge(g, settings.prime);
        }
        out.emit(j);
      } else if (bounds->parsed()) {
        const BoundsReport r = bounds_report(g, settings.prime);
        out.emit(to_json(r));
        if (!r.all_hold()) status = kViolation;
      } else if (primes->parsed()) {
        json records = json::array();
        for (const CutSetRecord& r : minimal_primes(g)) records.push_back(to_json(r));
        if (settings.format == "csv") {
          std::cout << csv_table(records);
        } else {
          out.emit({{"graph6", emit_graph6(g)}, {"count", records.size()}, {"records", records}});
        }
      } else if (decomp->parsed()) {
        if (g.order() > kMaxRegularityOrder) throw SizeError("decomp-check needs n <= 10");
        const auto ca = decomp_check(g, parse_block(block_a, "A"), parse_block(block_b, "B"),
                                     parse_block(block_c, "C"), settings.prime);
        out.emit(to_json(ca));
        if (ca.is_counterexample()) status = kViolation;
      }
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "beilab: " << e.what() << '\n';
    return kOperational;
  }
}
