#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bipnet/bipartivity.hpp"
#include "bipnet/clustering.hpp"
#include "bipnet/error.hpp"
#include "bipnet/io.hpp"
#include "bipnet/layout.hpp"
#include "bipnet/linkpred.hpp"

namespace bipnet::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string network;
  bool bipartite = false;
  bool strict = false;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  int max_iter = 100000;
  int dense_threshold = 0;  // 0: environment or built-in default
};

struct Options {
  Common common;
  std::string format = "json";
  bool header = false;
  std::string rule = "sign";
  std::string assignments;
  std::string report;
  std::string method = "spectral";
  std::string svg;
  std::string coords;
  bool no_edges = false;
  bool largest_component = false;
  std::vector<std::string> methods{"pa", "p3", "sinh", "neu", "n-poly", "com", "heat"};
  double train_frac = 0.75;
  std::optional<double> alpha;
  std::optional<int> rank;
  std::vector<double> coefficients;
  bool temporal = false;
  bool timing = false;
  std::string out;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("network", c.network, "edge list file (KONECT layout)")->required();
  sub->add_flag("--bipartite", c.bipartite, "columns are left and right ids");
  sub->add_flag("--strict-duplicates", c.strict, "reject parallel edges instead of summing weights");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_option("--tol", c.tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", c.max_iter, "operator applications per solve")->check(CLI::PositiveNumber);
  sub->add_option("--dense-threshold", c.dense_threshold, "largest dimension solved densely")
      ->check(CLI::PositiveNumber);
}

SolverConfig solver_config(const Common& c) {
  SolverConfig cfg;
  cfg.tol = c.tol;
  cfg.max_iter = c.max_iter;
  cfg.seed = c.seed;
  if (c.dense_threshold > 0) {
    cfg.dense_threshold = c.dense_threshold;
  } else if (const char* env = std::getenv("BIPNET_DENSE_THRESHOLD")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0)
      throw Error(ErrorKind::invalid_input, "BIPNET_DENSE_THRESHOLD must be a positive integer");
    cfg.dense_threshold = static_cast<int>(v);
  }
  cfg.validate();
  return cfg;
}

Network load(const Common& c) {
  ParseOptions p;
  p.bipartite = c.bipartite;
  p.duplicates = c.strict ? DuplicatePolicy::reject : DuplicatePolicy::aggregate;
  return parse_network(c.network, p);
}

std::string network_name(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::io, "cannot write " + path);
  f << content;
  if (!f) throw Error(ErrorKind::io, "write failed for " + path);
}

void emit(std::ostream& out, const std::string& path, const std::string& content) {
  if (path.empty()) out << content;
  else write_file(path, content);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_value(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", *v);
  return buf;
}

// stats

int cmd_stats(const Options& o, std::ostream& out) {
  const Network net = load(o.common);
  Json j;
  j["network"] = network_name(o.common.network);
  std::visit(
      [&](const auto& g) {
        using G = std::decay_t<decltype(g)>;
        const GraphStats s = stats(g);
        j["bipartite"] = std::is_same_v<G, BipartiteGraph>;
        j["weighted"] = g.weighted();
        j["size"] = s.size;
        if (s.left_size) j["left_size"] = *s.left_size;
        if (s.right_size) j["right_size"] = *s.right_size;
        j["volume"] = s.volume;
        j["total_weight"] = g.total_weight();
        j["fill"] = optional_number(s.fill);
      },
      net);
  emit(out, o.out, dump(j));
  return kOk;
}

// bipartivity

int cmd_bipartivity(const Options& o, std::ostream& out) {
  const SolverConfig cfg = solver_config(o.common);
  const Network net = load(o.common);
  const Graph g = std::holds_alternative<Graph>(net) ? std::get<Graph>(net) : std::get<BipartiteGraph>(net).as_unipartite();
  const BipartivityReport r = bipartivity_report(g, cfg);
  const std::string name = network_name(o.common.network);
  if (o.format == "tsv") {
    std::string text;
    if (o.header) text += "network\tsize\tvolume\tb_K\tb_A\tb_N\tb_c\tb_f\n";
    text += name + '\t' + std::to_string(g.node_count()) + '\t' + std::to_string(g.edge_count()) + '\t' +
            format_value(r.b_K) + '\t' + format_value(r.b_A) + '\t' + format_value(r.b_N) + '\t' +
            format_value(r.b_c) + '\t' + format_value(r.b_f) + '\n';
    emit(out, o.out, text);
    return kOk;
  }
  Json j;
  j["network"] = name;
  j["size"] = g.node_count();
  j["volume"] = g.edge_count();
  j["connected"] = r.connected;
  j["b_K"] = optional_number(r.b_K);
  j["b_A"] = optional_number(r.b_A);
  j["b_N"] = optional_number(r.b_N);
  j["b_c"] = optional_number(r.b_c);
  j["frustration"] = optional_number(r.f_exact);
  j["b_f"] = optional_number(r.b_f);
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  emit(out, o.out, dump(j));
  return kOk;
}

// cluster

Json cut_json(const CutReport& c) {
  Json j;
  j["cut"] = c.cut;
  j["rcut"] = c.rcut;
  j["class_sizes"] = Json::array({c.class_sizes.first, c.class_sizes.second});
  return j;
}

int cmd_cluster(const Options& o, std::ostream& out) {
  const SolverConfig cfg = solver_config(o.common);
  const SplitRule rule = o.rule == "sweep" ? SplitRule::sweep : SplitRule::sign;
  const Network net = load(o.common);
  Json j;
  j["network"] = network_name(o.common.network);
  j["rule"] = o.rule;
  std::string tsv;
  if (const auto* bg = std::get_if<BipartiteGraph>(&net)) {
    const CoClustering c = spectral_cocluster(*bg, cfg, rule);
    j["method"] = "cocluster";
    j["sigma1"] = c.sigma1;
    j["sigma2"] = c.sigma2;
    j["report"] = cut_json(c.cut);
    tsv = "side\tid\tclass\n";
    for (NodeId u = 0; u < bg->left_count(); ++u)
      tsv += "left\t" + std::to_string(bg->left_ids().external(u)) + '\t' + std::to_string(c.partition.left[u]) + '\n';
    for (NodeId v = 0; v < bg->right_count(); ++v)
      tsv += "right\t" + std::to_string(bg->right_ids().external(v)) + '\t' + std::to_string(c.partition.right[v]) + '\n';
  } else {
    const Graph& g = std::get<Graph>(net);
    const SpectralBipartition s = spectral_bipartition(g, cfg, rule);
    j["method"] = "fiedler";
    j["eigenvalue"] = s.eigenvalue;
    j["report"] = cut_json(s.cut);
    tsv = "id\tclass\n";
    for (NodeId u = 0; u < g.node_count(); ++u)
      tsv += std::to_string(g.ids().external(u)) + '\t' + std::to_string(s.partition.classes[u]) + '\n';
  }
  if (!o.assignments.empty()) write_file(o.assignments, tsv);
  if (!o.report.empty()) write_file(o.report, dump(j));
  emit(out, o.out, o.format == "tsv" ? tsv : dump(j));
  return kOk;
}

// layout

int cmd_layout(const Options& o, std::ostream& out) {
  const SolverConfig cfg = solver_config(o.common);
  const Network net = load(o.common);
  LayoutOptions lo;
  lo.largest_component = o.largest_component;
  LayoutCoords coords;
  std::vector<Edge> edges;
  if (const auto* bg = std::get_if<BipartiteGraph>(&net)) {
    coords = o.method == "two-line" ? two_line_layout(*bg, cfg, lo) : spectral_layout(*bg, cfg, lo);
    const Graph flat = bg->as_unipartite();
    edges.assign(flat.edges().begin(), flat.edges().end());
  } else {
    if (o.method == "two-line") throw Error(ErrorKind::invalid_input, "two-line layout needs --bipartite input");
    const Graph& g = std::get<Graph>(net);
    coords = spectral_layout(g, cfg, lo);
    edges.assign(g.edges().begin(), g.edges().end());
  }
  RenderOptions ro;
  ro.draw_edges = !o.no_edges;
  if (!o.svg.empty()) write_file(o.svg, render_svg(coords, edges, ro));
  if (!o.coords.empty()) write_file(o.coords, coords_tsv(coords));
  Json j;
  j["network"] = network_name(o.common.network);
  j["method"] = o.method;
  j["nodes"] = coords.nodes.size();
  j["eigenvalues"] = coords.eigenvalues;
  emit(out, o.out, dump(j));
  return kOk;
}

// linkpred

int cmd_linkpred(const Options& o, std::ostream& out) {
  const SolverConfig cfg = solver_config(o.common);
  std::vector<Method> methods;
  for (const auto& name : o.methods) {
    const auto m = parse_method(name);
    if (!m) throw Error(ErrorKind::invalid_input, "unknown method '" + name + "'");
    methods.push_back(*m);
  }
  SplitSpec spec;
  spec.train_fraction = o.train_frac;
  spec.seed = o.common.seed;
  spec.temporal = o.temporal;
  KernelParams params;
  params.alpha = o.alpha;
  params.rank = o.rank;
  if (!o.coefficients.empty()) params.poly_coefficients = o.coefficients;

  const Network net = load(o.common);
  const EvalReport r = std::visit([&](const auto& g) { return run_experiment(g, methods, spec, params, cfg); }, net);
  Json j;
  j["network"] = network_name(o.common.network);
  j["seed"] = r.seed;
  j["temporal"] = r.temporal;
  j["split"] = {{"train", r.train_size}, {"test", r.test_size}, {"zero", r.zero_size}};
  Json list = Json::array();
  for (const MethodResult& m : r.results) {
    Json e;
    e["method"] = std::string(method_name(m.method));
    e["auc"] = optional_number(m.auc);
    if (m.error) e["error"] = *m.error;
    Json p;
    p["alpha"] = m.alpha;
    p["rank"] = m.rank;
    if (!m.coefficients.empty()) p["coefficients"] = m.coefficients;
    e["params"] = p;
    if (o.timing) e["millis"] = m.millis;
    list.push_back(e);
  }
  j["methods"] = list;
  emit(out, o.out, dump(j));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral analysis of bipartite and unipartite networks"};
  app.name("bipnet");
  app.require_subcommand(1);
  Options o;

  auto* st = app.add_subcommand("stats", "size, volume and fill");
  add_common(st, o.common);
  st->add_option("--out", o.out, "output file (default stdout)");

  auto* bp = app.add_subcommand("bipartivity", "spectral bipartivity measures");
  add_common(bp, o.common);
  bp->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  bp->add_flag("--header", o.header, "prefix the tsv line with a header");
  bp->add_option("--out", o.out, "output file (default stdout)");

  auto* cl = app.add_subcommand("cluster", "spectral 2-clustering / co-clustering");
  add_common(cl, o.common);
  cl->add_option("--rule", o.rule, "sign or sweep")->check(CLI::IsMember({"sign", "sweep"}));
  cl->add_option("--format", o.format, "stdout format: json report or tsv assignments")
      ->check(CLI::IsMember({"json", "tsv"}));
  cl->add_option("--assignments", o.assignments, "write assignment tsv here");
  cl->add_option("--report", o.report, "write the cut report json here");
  cl->add_option("--out", o.out, "output file (default stdout)");

  auto* ly = app.add_subcommand("layout", "spectral drawings");
  add_common(ly, o.common);
  ly->add_option("--method", o.method, "spectral or two-line")->check(CLI::IsMember({"spectral", "two-line"}));
  ly->add_option("--svg", o.svg, "write an svg drawing");
  ly->add_option("--coords", o.coords, "write coordinates tsv");
  ly->add_flag("--no-edges", o.no_edges, "omit edges from the svg");
  ly->add_flag("--largest-component", o.largest_component, "lay out the largest component only");
  ly->add_option("--out", o.out, "output file (default stdout)");

  auto* lp = app.add_subcommand("linkpred", "link prediction evaluation");
  add_common(lp, o.common);
  lp->add_option("--methods", o.methods, "comma separated method names")->delimiter(',');
  lp->add_option("--train-frac", o.train_frac, "fraction of edges used for training")
      ->check(CLI::Range(0.0, 1.0));
  lp->add_option("--alpha", o.alpha, "kernel parameter")->check(CLI::PositiveNumber);
  lp->add_option("--rank", o.rank, "decomposition rank")->check(CLI::PositiveNumber);
  lp->add_option("--coefficients", o.coefficients, "odd polynomial coefficients")->delimiter(',');
  lp->add_flag("--temporal", o.temporal, "split by edge time");
  lp->add_flag("--timing", o.timing, "report per-method milliseconds");
  lp->add_option("--out", o.out, "report file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (st->parsed()) return cmd_stats(o, out);
    if (bp->parsed()) return cmd_bipartivity(o, out);
    if (cl->parsed()) return cmd_cluster(o, out);
    if (ly->parsed()) return cmd_layout(o, out);
    return cmd_linkpred(o, out);
  } catch (const Error& e) {
    Json j;
    j["error"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) j["error"]["best_residual"] = c->best_residual();
    out << dump(j);
    return kAnalysisError;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = {{"kind", "internal"}, {"message", e.what()}};
    out << dump(j);
    return kAnalysisError;
  }
}

}  // namespace bipnet::cli
