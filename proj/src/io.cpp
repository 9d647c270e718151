#include "graphpoly/io.hpp"

#include <fstream>
#include <sstream>

#include "graphpoly/errors.hpp"

namespace graphpoly {

namespace {

std::uint32_t vertex_index(const Json& v, std::uint32_t n, std::size_t edge) {
  if (!v.is_number_integer()) {
    throw ValidationError("edge " + std::to_string(edge) + ": endpoints must be integers");
  }
  const auto x = v.get<long long>();
  if (x < 0 || x >= static_cast<long long>(n)) {
    throw ValidationError("edge " + std::to_string(edge) + ": vertex " + std::to_string(x) +
                          " out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  return static_cast<std::uint32_t>(x);
}

mpz_class parse_integer(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ValidationError("bad integer \"" + s + "\"");
  return z;
}

mpq_class parse_rational(const Json& v) {
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<long long>())));
  if (!v.is_string()) throw ValidationError("rational entries must be strings or integers");
  const auto s = v.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return mpq_class(parse_integer(s));
  const mpz_class num = parse_integer(s.substr(0, slash));
  const mpz_class den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in \"" + s + "\"");
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

Json hex_list(const std::vector<EdgeSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(edge_set_hex(s));
  return out;
}

Json optional_double(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json string_list(const std::vector<mpz_class>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.tail, e.head}));
  return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("graph JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_number_integer()) {
    throw ValidationError("graph JSON needs an integer \"vertices\"");
  }
  const auto n = j["vertices"].get<long long>();
  if (n < 0 || n > 100000) throw ValidationError("vertex count out of range");
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw ValidationError("graph JSON needs an \"edges\" array");
  }
  std::vector<Edge> edges;
  const auto nv = static_cast<std::uint32_t>(n);
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const auto& e = j["edges"][i];
    if (!e.is_array() || e.size() != 2) {
      throw ValidationError("edge " + std::to_string(i) + " must be a pair [u, v]");
    }
    edges.push_back({vertex_index(e[0], nv, i), vertex_index(e[1], nv, i)});
  }
  return Graph(nv, std::move(edges));
}

Graph parse_graph(std::string_view text) { return graph_from_json(parse_json(text)); }

Json mpoly_to_json(const MPoly& p, const std::vector<std::string>& names) {
  const std::size_t n = p.variable_count();
  const auto vars = names.empty() ? default_variable_names(n) : names;
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json exp = Json::array();
    for (std::size_t v = 0; v < n; ++v) exp.push_back(t.mono.exp[v]);
    terms.push_back(Json{{"exp", exp}, {"coef", t.coef.get_str()}});
  }
  return Json{{"vars", vars}, {"terms", terms}};
}

MPoly mpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j["vars"].is_array() || !j.contains("terms") ||
      !j["terms"].is_array()) {
    throw ValidationError("polynomial JSON needs \"vars\" and \"terms\" arrays");
  }
  const std::size_t n = j["vars"].size();
  if (n > kMaxVariables) throw ValidationError("too many variables");
  std::vector<MPoly::Term> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t["exp"].is_array() || t["exp"].size() != n ||
        !t.contains("coef") || !t["coef"].is_string()) {
      throw ValidationError("malformed polynomial term");
    }
    MPoly::Term term;
    for (std::size_t v = 0; v < n; ++v) {
      const auto& e = t["exp"][v];
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 255) {
        throw ValidationError("exponent out of range");
      }
      term.mono.exp[v] = static_cast<std::uint8_t>(e.get<long long>());
    }
    term.coef = parse_integer(t["coef"].get<std::string>());
    terms.push_back(std::move(term));
  }
  return MPoly::from_terms(n, std::move(terms));
}

Json configuration_to_json(const Configuration& c) {
  Json rows = Json::array();
  for (const auto& row : c.basis()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    rows.push_back(r);
  }
  return Json{{"edges", c.edge_count()}, {"basis", rows}};
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_number_integer() ||
      !j.contains("basis") || !j["basis"].is_array()) {
    throw ValidationError("configuration JSON needs \"edges\" and \"basis\"");
  }
  const auto e = j["edges"].get<long long>();
  if (e < 0) throw ValidationError("negative edge count");
  RationalMatrix basis;
  for (const auto& row : j["basis"]) {
    if (!row.is_array()) throw ValidationError("basis rows must be arrays");
    std::vector<mpq_class> r;
    for (const auto& x : row) r.push_back(parse_rational(x));
    basis.push_back(std::move(r));
  }
  return Configuration(static_cast<std::size_t>(e), std::move(basis));
}

Json subspaces_to_json(const MotivicFamily& family, const BlowupSequence& rounds,
                       const std::vector<std::vector<EdgeSet>>& chains) {
  Json r = Json::array();
  for (const auto& round : rounds.rounds) r.push_back(hex_list(round));
  Json c = Json::array();
  for (const auto& chain : chains) c.push_back(hex_list(chain));
  return Json{{"members", hex_list(family.members)},
              {"maximal_cycles", hex_list(family.maximal_cycles)},
              {"rounds", r},
              {"rounds_avoid_unions", rounds.unions_avoid_earlier_rounds},
              {"chains", c}};
}

Json count_report_to_json(const CountReport& r) {
  Json fitted = nullptr;
  if (r.fitted) fitted = string_list(*r.fitted);
  Json interpolated = Json::array();
  for (const auto& x : r.interpolated) interpolated.push_back(x.get_str());
  return Json{{"graph", r.graph_id},
              {"fit_primes", r.fit_primes},
              {"validation_primes", r.validation_primes},
              {"primes", r.primes},
              {"affine_counts", string_list(r.affine_counts)},
              {"projective_counts", string_list(r.projective_counts)},
              {"fitted", fitted},
              {"polynomial", format_q_polynomial(r.interpolated)},
              {"interpolated", interpolated},
              {"verdict", to_string(r.verdict)},
              {"failing_prime", r.failing_prime ? Json(*r.failing_prime) : Json(nullptr)},
              {"note", r.note}};
}

Json period_estimate_to_json(const PeriodEstimate& e) {
  return Json{{"graph", e.graph_id},
              {"samples", e.sample_count},
              {"estimate", e.estimate},
              {"standard_error", e.standard_error},
              {"zeta_order", e.zeta_order},
              {"ratio_to_zeta", optional_double(e.ratio_to_zeta)},
              {"ratio_error", optional_double(e.ratio_error)},
              {"seed", std::to_string(e.seed)},
              {"sampler", to_string(e.sampler)},
              {"chart", e.chart},
              {"batches", e.batches},
              {"map_power", e.map_power},
              {"heavy_tail_alarm", e.heavy_tail_alarm},
              {"max_batch_share", e.max_batch_share}};
}

Json trace_to_json(const StratificationTrace& t) {
  return Json{{"loops", t.loops},
              {"order", t.order},
              {"minor_source", t.minor_source},
              {"psi_12", to_string(t.psi_12)},
              {"square_identity", t.square_identity},
              {"square_root_found", t.square_root_found},
              {"product_identity", t.product_identity},
              {"product_sign", t.product_sign},
              {"f", to_string(t.f)},
              {"g", to_string(t.g)},
              {"eliminant", to_string(t.eliminant)},
              {"eliminant_degree", t.eliminant_degree},
              {"discriminant", t.discriminant ? Json(to_string(*t.discriminant)) : Json(nullptr)},
              {"discriminant_square", t.discriminant_square},
              {"splits", t.splits}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 15];
  return s;
}

}  // namespace graphpoly
