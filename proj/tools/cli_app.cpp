#include "cli_app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "nrwalk/bipartite.hpp"
#include "nrwalk/bounds.hpp"
#include "nrwalk/entropy.hpp"
#include "nrwalk/errors.hpp"
#include "nrwalk/generators.hpp"
#include "nrwalk/graph6.hpp"
#include "nrwalk/monte_carlo.hpp"
#include "nrwalk/serialize.hpp"

namespace nrw {

namespace {

namespace fs = std::filesystem;

struct LoadedGraph {
  Graph graph;
  std::string id;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool looks_like_graph6(const fs::path& path, const std::string& format_in) {
  if (format_in == "g6") return true;
  if (format_in == "edges") return false;
  return path.extension() == ".g6";
}

std::vector<LoadedGraph> load_file(const fs::path& path,
                                   const std::string& format_in) {
  const std::string text = read_file(path);
  const std::string name = path.filename().string();
  std::vector<LoadedGraph> graphs;
  if (looks_like_graph6(path, format_in)) {
    // One graph per non-empty line.
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::pair<int, std::string>> lines;
    while (std::getline(in, line)) {
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!line.empty()) lines.emplace_back(line_no, line);
    }
    if (lines.empty()) throw ParseError(name + ": no graphs in file");
    for (auto& [no, content] : lines) {
      std::string id = name;
      if (lines.size() > 1) id += ":" + std::to_string(no);
      graphs.push_back({graph6_decode(content), std::move(id)});
    }
  } else {
    graphs.push_back({parse_edge_list(text), name});
  }
  return graphs;
}

// Loads the graphs named by a path (file or, when allowed, a directory
// whose files are audited in name order) or by a generator spec.
std::vector<LoadedGraph> load_inputs(const std::string& input,
                                     const std::string& gen_spec,
                                     const std::string& format_in,
                                     bool allow_directory) {
  if (!gen_spec.empty()) return {{generate(gen_spec), gen_spec}};
  const fs::path path(input);
  if (fs::is_directory(path)) {
    if (!allow_directory)
      throw Error(input + " is a directory (expected a single graph)");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path))
      if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) {
                return a.filename().string() < b.filename().string();
              });
    if (files.empty()) throw Error(input + ": directory has no files");
    std::vector<LoadedGraph> graphs;
    for (const auto& f : files) {
      auto batch = load_file(f, format_in);
      std::move(batch.begin(), batch.end(), std::back_inserter(graphs));
    }
    return graphs;
  }
  return load_file(path, format_in);
}

LoadedGraph load_single(const std::string& input, const std::string& gen_spec,
                        const std::string& format_in) {
  auto graphs =
      load_inputs(input, gen_spec, format_in, /*allow_directory=*/false);
  if (graphs.size() != 1)
    throw Error("expected exactly one graph, got " +
                std::to_string(graphs.size()));
  return std::move(graphs.front());
}

// Derived default horizon: half the girth, the radius the theorems sum to.
int default_horizon(const Graph& g) {
  auto og = girth(g);
  if (!og)
    throw PreconditionError(
        "graph has no cycle; give --horizon explicitly");
  return *og / 2;
}

struct GlobalOptions {
  std::string format = "text";
  bool full = false;

  bool json() const { return format == "json"; }
  SerializeOptions serialize() const { return SerializeOptions{full}; }
};

int do_audit(const std::vector<LoadedGraph>& inputs, const GlobalOptions& g,
             std::ostream& out) {
  std::vector<BoundReport> reports;
  reports.reserve(inputs.size());
  for (const auto& in : inputs)
    reports.push_back(audit_graph(in.graph, in.id));
  if (g.json()) {
    out << (reports.size() == 1
                ? bound_report_json(reports[0], g.serialize())
                : bound_reports_json(reports, g.serialize()))
        << "\n";
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << "\n";
      out << bound_report_text(reports[i], g.serialize());
    }
  }
  for (const auto& r : reports)
    if (r.any_violated()) return 1;
  return 0;
}

int do_walks(const LoadedGraph& in, int horizon, std::optional<int> from_vertex,
             std::optional<int> from_arc, const GlobalOptions& g,
             std::ostream& out) {
  const ArcSpace arcs(in.graph);
  if (from_vertex && from_arc)
    throw Error("--from-vertex and --from-arc are mutually exclusive");
  if (from_vertex && (*from_vertex < 0 || *from_vertex >= in.graph.num_vertices()))
    throw Error("vertex id out of range");
  if (from_arc && (*from_arc < 0 || *from_arc >= arcs.num_arcs()))
    throw Error("arc id out of range");
  const auto table = count_table(arcs, horizon);
  WalkReportInput report;
  report.n = in.graph.num_vertices();
  report.arcs = arcs.num_arcs();
  report.table = &table;
  report.arc_space = &arcs;
  report.from_vertex = from_vertex;
  report.from_arc = from_arc;
  out << (g.json() ? walk_report_json(report, g.serialize())
                   : walk_report_text(report, g.serialize()));
  if (g.json()) out << "\n";
  return 0;
}

int do_entropy(const LoadedGraph& in, std::optional<int> horizon_opt,
               const std::string& mode_name, bool mc, std::uint64_t seed,
               long long samples, const GlobalOptions& g, std::ostream& out) {
  StartMode mode;
  if (mode_name == "pi")
    mode = StartMode::kVertexPi;
  else if (mode_name == "arc")
    mode = StartMode::kArcUniform;
  else if (mode_name == "lr")
    mode = StartMode::kArcUniformLR;
  else if (mode_name == "rl")
    mode = StartMode::kArcUniformRL;
  else
    throw Error("unknown mode " + mode_name);

  const ArcSpace arcs(in.graph);
  std::optional<BipartiteView> bv;
  if (is_bipartite_mode(mode)) bv = bipartite_view(in.graph, arcs);

  const int horizon = horizon_opt ? *horizon_opt : default_horizon(in.graph);
  const auto counts = count_table(arcs, horizon);
  const auto audit = conditional_entropy_chain(arcs, counts, horizon, mode,
                                               bv ? &*bv : nullptr);
  std::optional<MonteCarloReport> mc_report;
  if (mc)
    mc_report = run_monte_carlo(arcs, horizon, mode, seed, samples,
                                bv ? &*bv : nullptr);
  const MonteCarloReport* mc_ptr = mc_report ? &*mc_report : nullptr;
  out << (g.json() ? entropy_audit_json(audit, g.serialize(), mc_ptr)
                   : entropy_audit_text(audit, g.serialize(), mc_ptr));
  if (g.json()) out << "\n";
  const bool ok = audit.ok() && (!mc_report || mc_report->ok());
  return ok ? 0 : 1;
}

int do_bounds(const std::string& delta, const std::string& dbar,
              const std::string& dl, const std::string& dr, int girth_value,
              const GlobalOptions& g, std::ostream& out) {
  const int forms = (!delta.empty() ? 1 : 0) + (!dbar.empty() ? 1 : 0) +
                    (!dl.empty() || !dr.empty() ? 1 : 0);
  if (forms != 1)
    throw Error("give exactly one of --delta, --dbar, or --dl with --dr");
  BoundValuesReport rep;
  rep.girth = girth_value;
  if (!delta.empty()) {
    const Rational q = parse_rational(delta);
    if (denominator(q) != 1)
      throw Error("--delta must be an integer");
    rep.delta = static_cast<int>(numerator(q));
    rep.moore_lb = moore_bound(*rep.delta, girth_value);
  } else if (!dbar.empty()) {
    rep.d_bar = parse_rational(dbar);
    rep.ahl_lb = ahl_bound(*rep.d_bar, girth_value);
  } else {
    if (dl.empty() || dr.empty())
      throw Error("--dl and --dr must be given together");
    rep.d_left = parse_rational(dl);
    rep.d_right = parse_rational(dr);
    auto [lb_l, lb_r] = hoory_bounds(*rep.d_left, *rep.d_right, girth_value);
    rep.hoory_lb_l = lb_l;
    rep.hoory_lb_r = lb_r;
  }
  out << (g.json() ? bound_values_json(rep) : bound_values_text(rep));
  if (g.json()) out << "\n";
  return 0;
}

int do_gen(const std::string& spec, const std::string& out_format,
           std::ostream& out) {
  const Graph graph = generate(spec);
  if (out_format == "edges")
    out << write_edge_list(graph);
  else
    out << graph6_encode(graph) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"non-returning walk statistics, girth/degree lower bounds, "
               "and entropy-certificate audits for undirected graphs"};
  app.name("nrwalk");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--full", global.full, "include detail fields in reports");

  std::string input, gen_spec, format_in;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "graph file (or directory)");
    sub->add_option("--gen", gen_spec, "generate a named family instead, "
                    "e.g. petersen, cycle:7, complete_bipartite:2,3");
    sub->add_option("--format-in", format_in, "force input format")
        ->check(CLI::IsMember({"g6", "edges"}));
    sub->fallthrough();
  };

  auto* audit = app.add_subcommand("audit", "evaluate all bounds on graphs");
  add_input(audit);

  auto* walks =
      app.add_subcommand("walks", "tabulate non-returning walk counts");
  add_input(walks);
  int horizon = 0;
  std::optional<int> from_vertex, from_arc;
  walks->add_option("--horizon", horizon, "maximum walk length")->required();
  walks->add_option("--from-vertex", from_vertex,
                    "report a single vertex row");
  walks->add_option("--from-arc", from_arc, "report a single arc row");

  auto* entropy =
      app.add_subcommand("entropy", "audit the walk-process entropy chain");
  add_input(entropy);
  std::optional<int> entropy_horizon;
  std::string mode = "pi";
  bool mc = false;
  std::uint64_t seed = kDefaultMcSeed;
  long long samples = kDefaultMcSamples;
  entropy->add_option("--horizon", entropy_horizon,
                      "walk length (default: girth/2)");
  entropy->add_option("--mode", mode, "start distribution")
      ->check(CLI::IsMember({"pi", "arc", "lr", "rl"}))
      ->capture_default_str();
  entropy->add_flag("--mc", mc, "add a Monte-Carlo cross-check");
  entropy->add_option("--seed", seed, "Monte-Carlo seed");
  entropy->add_option("--samples", samples, "Monte-Carlo sample count");

  auto* bounds =
      app.add_subcommand("bounds", "evaluate bounds from parameters only");
  std::string delta, dbar, dl, dr;
  int girth_value = 0;
  bounds->add_option("--delta", delta, "minimum degree (integer)");
  bounds->add_option("--dbar", dbar, "average degree (rational, e.g. 14/5)");
  bounds->add_option("--dl", dl, "left average degree");
  bounds->add_option("--dr", dr, "right average degree");
  bounds->add_option("--girth", girth_value, "girth")->required();
  bounds->fallthrough();

  auto* gen = app.add_subcommand("gen", "emit a named graph family");
  std::string spec, out_format = "g6";
  gen->add_option("family", spec, "family spec, e.g. petersen, cycle:7")
      ->required();
  gen->add_option("--out-format", out_format, "graph serialization")
      ->check(CLI::IsMember({"g6", "edges"}))
      ->capture_default_str();
  gen->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(audit)) {
      if (input.empty() && gen_spec.empty())
        throw Error("audit needs an input path or --gen");
      return do_audit(load_inputs(input, gen_spec, format_in,
                                  /*allow_directory=*/true),
                      global, out);
    }
    if (app.got_subcommand(walks)) {
      if (input.empty() && gen_spec.empty())
        throw Error("walks needs an input path or --gen");
      return do_walks(load_single(input, gen_spec, format_in), horizon,
                      from_vertex, from_arc, global, out);
    }
    if (app.got_subcommand(entropy)) {
      if (input.empty() && gen_spec.empty())
        throw Error("entropy needs an input path or --gen");
      return do_entropy(load_single(input, gen_spec, format_in),
                        entropy_horizon, mode, mc, seed, samples, global,
                        out);
    }
    if (app.got_subcommand(bounds))
      return do_bounds(delta, dbar, dl, dr, girth_value, global, out);
    if (app.got_subcommand(gen)) return do_gen(spec, out_format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace nrw
