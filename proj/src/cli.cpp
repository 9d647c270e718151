#include "graphpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "graphpoly/config_poly.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/families.hpp"
#include "graphpoly/graph_poly.hpp"
#include "graphpoly/io.hpp"
#include "graphpoly/parallel.hpp"
#include "graphpoly/period.hpp"
#include "graphpoly/point_count.hpp"
#include "graphpoly/strata.hpp"

namespace graphpoly {

namespace {

struct Options {
  std::string format = "text";
  unsigned threads = 0;
  double budget = 1e9;

  std::string graph_path;
  std::string config_path;
  std::string method;
  std::string mode = "exhaustive";
  std::size_t max_chains = 1000000;
  std::vector<std::uint32_t> q;
  std::vector<std::uint32_t> fit;
  std::vector<std::uint32_t> validate;
  std::size_t stratum = 1;
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  std::string sampler = "net";
  std::optional<std::size_t> chart;
  unsigned map_power = 0;
  std::string family;
  std::optional<std::uint32_t> family_n;
  std::string emit = "graph";
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool edge_indices = false;
};

struct Input {
  std::string path;
  std::uint64_t hash = 0;
};

class Run {
 public:
  Run(const Options& o, std::string command, std::vector<std::string> args)
      : opts_(o), command_(std::move(command)), args_(std::move(args)) {}

  bool json() const { return opts_.format == "json"; }

  Graph graph() {
    if (opts_.graph_path.empty()) throw ValidationError("--graph is required");
    return parse_graph(read_input(opts_.graph_path));
  }

  std::string read_input(const std::string& path) {
    std::string text = read_file(path);
    inputs_.push_back({path, fnv1a64(text)});
    return text;
  }

  void use_seed(std::uint64_t s) { seed_ = s; }

  Json manifest() const {
    Json inputs = Json::array();
    for (const auto& in : inputs_) inputs.push_back(Json{{"path", in.path}, {"fnv1a64", hex64(in.hash)}});
    return Json{{"version", kVersion},
                {"command", command_},
                {"args", args_},
                {"inputs", inputs},
                {"seed", seed_ ? Json(std::to_string(*seed_)) : Json(nullptr)}};
  }

  void emit_json(std::ostream& out, Json result) const {
    Json doc{{"manifest", manifest()}, {"result", std::move(result)}};
    out << doc.dump(2) << "\n";
  }

  CountOptions count_options() const {
    if (!(opts_.budget >= 1) || opts_.budget > 1.8e19) throw ValidationError("--budget out of range");
    CountOptions c;
    c.budget = static_cast<std::uint64_t>(opts_.budget);
    c.threads = opts_.threads;
    return c;
  }

 private:
  const Options& opts_;
  std::string command_;
  std::vector<std::string> args_;
  std::vector<Input> inputs_;
  std::optional<std::uint64_t> seed_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* ok_failed(bool b) { return b ? "ok" : "FAILED"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> hexes(const std::vector<EdgeSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(edge_set_hex(s));
  return out;
}

int cmd_poly(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  MPoly psi;
  if (o.method.empty() || o.method == "det") psi = psi_determinant(g);
  else if (o.method == "trees") psi = psi_spanning_trees(g);
  else throw ValidationError("--method must be trees or det");
  if (run.json()) {
    run.emit_json(out, Json{{"edges", g.edge_count()},
                            {"loops", loop_rank(g)},
                            {"term_count", psi.term_count()},
                            {"text", to_string(psi)},
                            {"polynomial", mpoly_to_json(psi)}});
  } else {
    out << to_string(psi) << "\n";
  }
  return kExitOk;
}

int cmd_identities_config(Run& run, const Options& o, std::ostream& out) {
  const Configuration c = configuration_from_json(parse_json(run.read_input(o.config_path)));
  const bool pluecker = pluecker_coefficient_check(c);
  std::optional<FunctionalEquation> fe;
  if (c.dim() < c.edge_count()) fe = functional_equation_check(c);
  const bool all = pluecker && (!fe || fe->holds);
  if (run.json()) {
    run.emit_json(out, Json{{"edges", c.edge_count()},
                            {"dim", c.dim()},
                            {"pluecker", pluecker},
                            {"functional_equation", fe ? Json(fe->holds) : Json(nullptr)},
                            {"lambda", fe && fe->holds ? Json(fe->lambda.get_str()) : Json(nullptr)},
                            {"all_hold", all}});
  } else {
    out << "pluecker coefficients: " << ok_failed(pluecker) << "\n";
    if (fe) {
      out << "functional equation: " << ok_failed(fe->holds);
      if (fe->holds) out << " (lambda " << fe->lambda.get_str() << ")";
      out << "\n";
    } else {
      out << "functional equation: skipped (d = E)\n";
    }
  }
  return all ? kExitOk : kExitInternal;
}

int cmd_identities(Run& run, const Options& o, std::ostream& out) {
  if (!o.config_path.empty()) return cmd_identities_config(run, o, out);
  const Graph g = run.graph();
  const MPoly trees = psi_spanning_trees(g);
  const bool dual = trees == psi_determinant(g);

  bool deletion = true;
  for (std::size_t e = 0; e < g.edge_count(); ++e) deletion &= contraction_deletion(g, e).identity_holds;

  const Configuration c = graph_configuration(g);
  const bool pluecker = pluecker_coefficient_check(c);
  std::optional<FunctionalEquation> fe;
  if (c.dim() < c.edge_count()) fe = functional_equation_check(c);

  const DodgsonContext ctx = dodgson_form(g);
  std::size_t pairs = 0;
  bool dodgson_ok = true;
  for (std::size_t k = 0; k < ctx.loops(); ++k) {
    for (std::size_t l = k + 1; l < ctx.loops(); ++l) {
      ++pairs;
      dodgson_ok &= dodgson_identity_holds(ctx, {}, {}, k, l).holds;
    }
  }
  const bool all = dual && deletion && pluecker && (!fe || fe->holds) && dodgson_ok;
  if (run.json()) {
    run.emit_json(out, Json{{"dual_routes", dual},
                            {"contraction_deletion", deletion},
                            {"pluecker", pluecker},
                            {"functional_equation", fe ? Json(fe->holds) : Json(nullptr)},
                            {"dodgson_pairs", pairs},
                            {"dodgson", dodgson_ok},
                            {"all_hold", all}});
  } else {
    out << "dual routes: " << ok_failed(dual) << "\n";
    out << "contraction-deletion: " << ok_failed(deletion) << " (" << g.edge_count() << " edges)\n";
    out << "pluecker coefficients: " << ok_failed(pluecker) << "\n";
    out << "functional equation: " << (fe ? ok_failed(fe->holds) : "skipped (no dual)") << "\n";
    out << "dodgson identity: " << ok_failed(dodgson_ok) << " (" << pairs << " index pairs)\n";
  }
  return all ? kExitOk : kExitInternal;
}

int cmd_divergence(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  DivergenceMode mode;
  if (o.mode == "exhaustive") mode = DivergenceMode::kExhaustive;
  else if (o.mode == "vertex") mode = DivergenceMode::kVertexInduced;
  else throw ValidationError("--mode must be exhaustive or vertex");
  const DivergenceResult r = is_primitive_divergent(g, mode);
  if (run.json()) {
    Json witness = nullptr;
    if (r.witness) {
      witness = Json{{"subgraph", edge_set_hex(r.witness->subgraph)},
                     {"edges", r.witness->edges},
                     {"loops", r.witness->loops},
                     {"defect", r.witness->defect}};
    }
    run.emit_json(out, Json{{"primitive", r.primitive},
                            {"count_matches", r.count_matches},
                            {"mode", o.mode},
                            {"witness", witness},
                            {"reason", r.reason}});
  } else {
    out << "primitive log divergent: " << yes_no(r.primitive) << "\n";
    if (!r.primitive && !r.reason.empty()) out << "reason: " << r.reason << "\n";
  }
  return kExitOk;
}

int cmd_subspaces(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  const MotivicFamily family = motivic_family(g);
  const BlowupSequence seq = blowup_sequence(family);
  const auto chains = saturated_chains(family, o.max_chains);
  bool laws = true;
  for (const auto& c : chains) laws &= chain_law_holds(g, c);
  if (run.json()) {
    Json r = subspaces_to_json(family, seq, chains);
    r["chain_law"] = laws;
    run.emit_json(out, r);
  } else {
    out << "members: " << family.members.size() << "\n";
    out << "maximal cycles: " << join(hexes(family.maximal_cycles), " ") << "\n";
    for (std::size_t i = 0; i < seq.rounds.size(); ++i) {
      out << "round " << i + 1 << ": " << join(hexes(seq.rounds[i]), " ") << "\n";
    }
    out << "chains: " << chains.size() << ", chain law " << ok_failed(laws) << "\n";
  }
  return laws ? kExitOk : kExitInternal;
}

CountMethod parse_count_method(const std::string& m) {
  if (m.empty() || m == "split") return CountMethod::kSplit;
  if (m == "brute") return CountMethod::kBrute;
  throw ValidationError("--method must be split or brute");
}

int cmd_count(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  if (o.q.empty()) throw ValidationError("--q needs at least one prime");
  const CountMethod method = parse_count_method(o.method);
  const CountOptions copts = run.count_options();
  const MPoly psi = psi_determinant(g);
  Json rows = Json::array();
  for (const auto q : o.q) {
    const mpz_class affine = method == CountMethod::kSplit ? count_affine_split(psi, q, copts)
                                                           : count_affine_brute(psi, q, copts);
    const mpz_class projective = count_projective(psi, q, copts, method);
    if (run.json()) {
      rows.push_back(Json{{"q", q}, {"affine", affine.get_str()}, {"projective", projective.get_str()}});
    } else {
      out << "q=" << q << " affine=" << affine.get_str() << " projective=" << projective.get_str() << "\n";
    }
  }
  if (run.json()) {
    run.emit_json(out, Json{{"graph", o.graph_path},
                            {"method", method == CountMethod::kSplit ? "split" : "brute"},
                            {"counts", rows}});
  }
  return kExitOk;
}

int cmd_fit(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  const CountReport r = fit_point_count_polynomial(g, o.fit, o.validate, run.count_options(), o.graph_path);
  if (run.json()) {
    run.emit_json(out, count_report_to_json(r));
  } else {
    out << format_q_polynomial(r.interpolated) << " [" << to_string(r.verdict) << "]\n";
    if (r.verdict != Verdict::kPolynomial && !r.note.empty()) out << r.note << "\n";
  }
  return kExitOk;
}

int cmd_strata(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  if (o.q.empty()) throw ValidationError("--q needs at least one prime");
  const CountOptions copts = run.count_options();
  Json rows = Json::array();
  for (const auto q : o.q) {
    const mpz_class n = rank_stratum_count(g, o.stratum, q, copts);
    if (run.json()) rows.push_back(Json{{"q", q}, {"count", n.get_str()}});
    else out << "q=" << q << " i=" << o.stratum << " count=" << n.get_str() << "\n";
  }
  if (run.json()) run.emit_json(out, Json{{"i", o.stratum}, {"counts", rows}});
  return kExitOk;
}

int cmd_trace(Run& run, const Options&, std::ostream& out) {
  const Graph g = run.graph();
  const StratificationTrace t = stratification_trace(g);
  if (run.json()) {
    run.emit_json(out, trace_to_json(t));
  } else {
    std::vector<std::string> order;
    for (auto e : t.order) order.push_back(std::to_string(e));
    out << "loops: " << t.loops << "\n";
    out << "variable order: " << join(order, " ") << "\n";
    out << "minor source: " << t.minor_source << "\n";
    out << "square identity: " << ok_failed(t.square_identity) << "\n";
    out << "square root recovered: " << yes_no(t.square_root_found) << "\n";
    out << "product identity: " << ok_failed(t.product_identity) << " (sign " << t.product_sign << ")\n";
    out << "eliminant degree in A6: " << t.eliminant_degree << "\n";
    if (t.discriminant) out << "discriminant square: " << yes_no(t.discriminant_square) << "\n";
    out << "eliminant splits: " << yes_no(t.splits) << "\n";
  }
  return kExitOk;
}

int cmd_period(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  PeriodOptions popts;
  popts.sampler = parse_sampler(o.sampler);
  popts.chart = o.chart;
  popts.threads = o.threads;
  popts.map_power = o.map_power;
  run.use_seed(o.seed);
  const PeriodEstimate e = estimate_period(g, o.samples, o.seed, popts, o.graph_path);
  if (run.json()) {
    run.emit_json(out, period_estimate_to_json(e));
  } else {
    std::ostringstream s;
    s.precision(8);
    s << "estimate: " << e.estimate << " +- " << e.standard_error << "\n";
    if (e.ratio_to_zeta) {
      s << "ratio to zeta(" << e.zeta_order << "): " << *e.ratio_to_zeta << " +- " << *e.ratio_error << "\n";
    }
    s << "samples " << e.sample_count << ", seed " << e.seed << ", sampler " << to_string(e.sampler)
      << ", chart " << e.chart << ", map power " << e.map_power << "\n";
    if (e.heavy_tail_alarm) s << "warning: heavy tail (largest batch share " << e.max_batch_share << ")\n";
    out << s.str();
  }
  return kExitOk;
}

Json matrix_json(const SymbolicMatrix& m, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) r.push_back(to_string(m.at(i, j), names));
    rows.push_back(r);
  }
  return rows;
}

void print_matrix(std::ostream& out, const SymbolicMatrix& m, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    std::vector<std::string> cells;
    for (std::size_t j = 0; j < m.dim(); ++j) cells.push_back(to_string(m.at(i, j), names));
    out << "[ " << join(cells, " | ") << " ]\n";
  }
}

int cmd_family(Run& run, const Options& o, std::ostream& out) {
  if (o.family == "wheel") {
    if (!o.family_n) throw ValidationError("family wheel needs N");
    if (*o.family_n < 3 || *o.family_n > 16) throw ValidationError("wheel size must be in 3..16");
    const WheelContext ctx = wheel_context(*o.family_n);
    const auto names = ctx.ab_names();
    if (o.emit == "graph") {
      if (run.json()) run.emit_json(out, Json{{"graph", graph_to_json(ctx.graph)}});
      else out << graph_to_json(ctx.graph).dump() << "\n";
    } else if (o.emit == "matrix") {
      if (run.json()) run.emit_json(out, Json{{"vars", names}, {"matrix", matrix_json(ctx.matrix_AB, names)}});
      else print_matrix(out, ctx.matrix_AB, names);
    } else if (o.emit == "poly") {
      const MPoly psi = wheel_psi(ctx);
      if (run.json()) run.emit_json(out, Json{{"text", to_string(psi, names)}, {"polynomial", mpoly_to_json(psi, names)}});
      else out << to_string(psi, names) << "\n";
    } else if (o.emit == "identities") {
      const WheelIdentities w = wheel_identities(*o.family_n);
      if (run.json()) {
        run.emit_json(out, Json{{"substitution", w.substitution},
                                {"decomposition", w.decomposition},
                                {"left_recurrence", w.left_recurrence},
                                {"right_recurrence", w.right_recurrence},
                                {"corner_form", w.corner_form},
                                {"discriminant", w.discriminant}});
      } else {
        out << "substitution: " << ok_failed(w.substitution) << "\n"
            << "decomposition: " << ok_failed(w.decomposition) << "\n"
            << "left recurrence: " << ok_failed(w.left_recurrence) << "\n"
            << "right recurrence: " << ok_failed(w.right_recurrence) << "\n"
            << "corner form: " << ok_failed(w.corner_form) << "\n"
            << "discriminant: " << ok_failed(w.discriminant) << "\n";
      }
      return w.all() ? kExitOk : kExitInternal;
    } else {
      throw ValidationError("--emit must be graph, matrix, poly or identities");
    }
    return kExitOk;
  }
  if (o.family == "example12") {
    if (o.family_n) throw ValidationError("example12 takes no size");
    const Graph g = example_graph_12();
    if (o.emit == "graph") {
      if (run.json()) run.emit_json(out, Json{{"graph", graph_to_json(g)}});
      else out << graph_to_json(g).dump() << "\n";
    } else if (o.emit == "poly") {
      const MPoly psi = psi_determinant(g);
      if (run.json()) run.emit_json(out, Json{{"text", to_string(psi)}, {"polynomial", mpoly_to_json(psi)}});
      else out << to_string(psi) << "\n";
    } else if (o.emit == "matrix") {
      const DodgsonContext ctx = dodgson_form(g);
      std::vector<std::string> names;
      for (auto e : ctx.order) names.push_back("A" + std::to_string(e + 1));
      if (run.json()) run.emit_json(out, Json{{"vars", names}, {"matrix", matrix_json(ctx.matrix, names)}});
      else print_matrix(out, ctx.matrix, names);
    } else {
      throw ValidationError("--emit must be graph, matrix or poly for example12");
    }
    return kExitOk;
  }
  throw ValidationError("unknown family \"" + o.family + "\" (wheel or example12)");
}

int cmd_dodgson(Run& run, const Options& o, std::ostream& out) {
  const Graph g = run.graph();
  const DodgsonContext ctx = dodgson_form(g);
  std::vector<std::string> names;
  for (auto e : ctx.order) names.push_back("A" + std::to_string(e + 1));
  MPoly p;
  if (o.edge_indices) {
    // Input edge numbers to positions in the reordered variables.
    auto position = [&](std::size_t e) {
      const auto it = std::find(ctx.order.begin(), ctx.order.end(), e);
      if (it == ctx.order.end()) throw ValidationError("edge " + std::to_string(e) + " out of range");
      return static_cast<std::size_t>(it - ctx.order.begin());
    };
    std::vector<std::size_t> rows, cols;
    for (auto e : o.rows) rows.push_back(position(e));
    for (auto e : o.cols) cols.push_back(position(e));
    p = graph_dodgson(ctx, rows, cols);
  } else {
    p = dodgson(ctx, o.rows, o.cols);
  }
  if (run.json()) {
    run.emit_json(out, Json{{"order", ctx.order},
                            {"loops", ctx.loops()},
                            {"rows", o.rows},
                            {"cols", o.cols},
                            {"edge_indices", o.edge_indices},
                            {"text", to_string(p, names)},
                            {"polynomial", mpoly_to_json(p, names)}});
  } else {
    out << to_string(p, names) << "\n";
  }
  return kExitOk;
}

// Arguments recorded in the manifest: everything except the worker count.
std::vector<std::string> manifest_args(const std::vector<std::string>& args) {
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0) continue;
    kept.push_back(args[i]);
  }
  return kept;
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.threads = default_thread_count();

  CLI::App app{"Graph polynomials, point counts and periods", "graphpoly"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", o.budget, "Point evaluations per brute-force count");

  auto graph_opt = [&](CLI::App* sub) {
    return sub->add_option("--graph", o.graph_path, "Graph JSON file");
  };
  auto primes = [](CLI::App* sub, const std::string& name, std::vector<std::uint32_t>& v,
                   const std::string& help) { return sub->add_option(name, v, help)->delimiter(','); };

  std::map<std::string, std::function<int(Run&, const Options&, std::ostream&)>> handlers;

  auto* poly = app.add_subcommand("poly", "Graph polynomial");
  graph_opt(poly)->required();
  poly->add_option("--method", o.method, "trees or det (default)");
  handlers["poly"] = cmd_poly;

  auto* ident = app.add_subcommand("identities", "Check the polynomial identities on a graph or configuration");
  auto* ig = graph_opt(ident);
  auto* ic = ident->add_option("--config", o.config_path, "Configuration JSON file");
  ig->excludes(ic);
  ident->require_option(1);
  handlers["identities"] = cmd_identities;

  auto* div = app.add_subcommand("divergence", "Primitive log divergence test");
  graph_opt(div)->required();
  div->add_option("--mode", o.mode, "exhaustive or vertex");
  handlers["divergence"] = cmd_divergence;

  auto* sub = app.add_subcommand("subspaces", "Coordinate linear spaces, blow-up rounds and chains");
  graph_opt(sub)->required();
  sub->add_option("--max-chains", o.max_chains, "Chain enumeration limit");
  handlers["subspaces"] = cmd_subspaces;

  auto* count = app.add_subcommand("count", "Point counts over F_q");
  graph_opt(count)->required();
  primes(count, "--q", o.q, "Comma-separated primes")->required();
  count->add_option("--method", o.method, "split (default) or brute");
  handlers["count"] = cmd_count;

  auto* fit = app.add_subcommand("fit", "Fit and validate a counting polynomial");
  graph_opt(fit)->required();
  primes(fit, "--fit", o.fit, "Primes used for the fit")->required();
  primes(fit, "--validate", o.validate, "Held-out primes");
  handlers["fit"] = cmd_fit;

  auto* strata = app.add_subcommand("strata", "Rank stratum counts");
  graph_opt(strata)->required();
  strata->add_option("--i", o.stratum, "Rank drop");
  primes(strata, "--q", o.q, "Comma-separated primes")->required();
  handlers["strata"] = cmd_strata;

  auto* trace = app.add_subcommand("trace", "Stratification steps for a graph with 2n edges and n loops");
  graph_opt(trace)->required();
  handlers["trace"] = cmd_trace;

  auto* period = app.add_subcommand("period", "Monte Carlo estimate of the period");
  graph_opt(period)->required();
  period->add_option("--samples", o.samples, "Sample count");
  period->add_option("--seed", o.seed, "Seed");
  period->add_option("--sampler", o.sampler, "net or prng")->check(CLI::IsMember({"net", "prng"}));
  period->add_option("--chart", o.chart, "Edge whose variable is set to 1 (default: last)");
  period->add_option("--map-power", o.map_power, "Power of the cube map (0: loop number)");
  handlers["period"] = cmd_period;

  auto* family = app.add_subcommand("family", "Built-in graphs: wheel N, example12");
  family->add_option("kind", o.family, "wheel or example12")->required();
  family->add_option("n", o.family_n, "Wheel size");
  family->add_option("--emit", o.emit, "graph, matrix, poly or identities");
  handlers["family"] = cmd_family;

  auto* dod = app.add_subcommand("dodgson", "Dodgson polynomial of the graph's symmetric matrix");
  graph_opt(dod)->required();
  dod->add_option("--rows", o.rows, "Removed rows")->delimiter(',');
  dod->add_option("--cols", o.cols, "Removed columns")->delimiter(',');
  dod->add_flag("--edge-indices", o.edge_indices, "Index by input edges in the bordered graph matrix");
  handlers["dodgson"] = cmd_dodgson;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kExitOk;
    err << app.help();
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Run run(o, command, manifest_args(args));
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = handlers.at(command)(run, o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  err << "threads=" << o.threads << " wall=" << wall.count() << "s\n";
  return code;
}

}  // namespace graphpoly
