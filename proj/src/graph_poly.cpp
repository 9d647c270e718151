#include "graphpoly/graph_poly.hpp"

#include <algorithm>
#include <numeric>

#include "graphpoly/errors.hpp"

namespace graphpoly {
namespace {

void check_variable_budget(const Graph& g) {
  if (g.edge_count() > kMaxVariables) {
    throw ValidationError("graph polynomial needs " + std::to_string(g.edge_count()) +
                          " variables; at most " + std::to_string(kMaxVariables) + " supported");
  }
}

// Maps variables of a minor back into the parent's numbering.
MPoly lift(const MPoly& p, std::size_t parent_count, const std::vector<std::optional<std::size_t>>& old_to_new) {
  std::vector<std::optional<std::size_t>> new_to_old(p.variable_count());
  for (std::size_t old = 0; old < old_to_new.size(); ++old) {
    if (old_to_new[old]) new_to_old[*old_to_new[old]] = old;
  }
  return rename_variables(p, parent_count, new_to_old);
}

void check_index_set(const std::vector<std::size_t>& idx, std::size_t dim, const char* what) {
  std::vector<bool> seen(dim, false);
  for (auto i : idx) {
    if (i >= dim) throw ValidationError(std::string(what) + " index " + std::to_string(i) + " out of range");
    if (seen[i]) throw ValidationError(std::string(what) + " index " + std::to_string(i) + " repeated");
    seen[i] = true;
  }
}

MPoly minor_of(const SymbolicMatrix& m, const std::vector<std::size_t>& rows,
               const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw ValidationError("Dodgson minor needs |I| = |J|");
  check_index_set(rows, m.dim(), "row");
  check_index_set(cols, m.dim(), "column");
  return determinant(m.minor(rows, cols));
}

}  // namespace

MPoly psi_spanning_trees(const Graph& g) {
  check_variable_budget(g);
  const std::size_t E = g.edge_count();
  std::vector<MPoly::Term> terms;
  for (const auto& t : spanning_forests(g)) {
    Monomial m;
    for (std::size_t e = 0; e < E; ++e) {
      if (!t.contains(e)) m.exp[e] = 1;
    }
    terms.push_back({m, 1});
  }
  return MPoly::from_terms(E, std::move(terms));
}

MPoly psi_determinant(const Graph& g) { return psi_determinant(g, first_spanning_forest(g)); }

MPoly psi_determinant(const Graph& g, const Subgraph& tree) {
  check_variable_budget(g);
  const IntMatrix c = cycle_basis(g, tree);
  const std::size_t h = c.size();
  const std::size_t E = g.edge_count();
  SymbolicMatrix m(h, E);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      std::vector<MPoly::Term> terms;
      for (std::size_t e = 0; e < E; ++e) {
        const int w = c[i][e] * c[j][e];
        if (w == 0) continue;
        Monomial mono;
        mono.exp[e] = 1;
        terms.push_back({mono, w});
      }
      m.at(i, j) = MPoly::from_terms(E, terms);
      m.at(j, i) = m.at(i, j);
    }
  }
  return determinant(m);
}

ContractionDeletion contraction_deletion(const Graph& g, std::size_t e) {
  if (e >= g.edge_count()) throw ValidationError("edge index out of range");
  const std::size_t E = g.edge_count();
  EdgeSet only;
  only.set(e);
  const Subgraph s(g, only);
  ContractionDeletion out;
  out.edge_map = edge_compaction(g, only);
  const Graph deleted = delete_edges(g, s);
  out.bridge = component_count(deleted) > component_count(g);
  out.deletion = out.bridge ? MPoly(E - 1) : psi_determinant(deleted);
  out.contraction = g.edge(e).is_self_loop() ? MPoly(E - 1) : psi_determinant(contract(g, s));

  const MPoly whole = psi_determinant(g);
  const MPoly rebuilt = MPoly::variable(E, e) * lift(out.deletion, E, out.edge_map) +
                        lift(out.contraction, E, out.edge_map);
  out.identity_holds = rebuilt == whole;
  return out;
}

MPoly DodgsonContext::psi() const { return determinant(matrix); }

DodgsonContext dodgson_form(const Graph& g) { return dodgson_form(g, first_spanning_forest(g)); }

DodgsonContext dodgson_form(const Graph& g, const Subgraph& tree) {
  check_variable_budget(g);
  if (&tree.parent() != &g && !(tree.parent() == g)) {
    throw ValidationError("spanning forest belongs to a different graph");
  }
  const IntMatrix c = cycle_basis(g, Subgraph(g, tree.edges()));
  const std::size_t E = g.edge_count();
  const std::size_t h = c.size();

  DodgsonContext ctx;
  ctx.graph = g;
  ctx.tree = tree.edges();
  for (std::size_t e = 0; e < E; ++e) {
    if (!tree.contains(e)) ctx.order.push_back(e);
  }
  for (std::size_t e = 0; e < E; ++e) {
    if (tree.contains(e)) ctx.order.push_back(e);
  }

  auto linear = [E](std::vector<std::pair<std::size_t, int>> parts) {
    std::vector<MPoly::Term> terms;
    for (auto [var, w] : parts) {
      Monomial m;
      m.exp[var] = 1;
      terms.push_back({m, w});
    }
    return MPoly::from_terms(E, std::move(terms));
  };

  ctx.matrix = SymbolicMatrix(h, E);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      std::vector<std::pair<std::size_t, int>> parts;
      for (std::size_t k = 0; k < E; ++k) {
        const int w = c[i][ctx.order[k]] * c[j][ctx.order[k]];
        if (w != 0) parts.push_back({k, w});
      }
      ctx.matrix.at(i, j) = linear(parts);
      ctx.matrix.at(j, i) = ctx.matrix.at(i, j);
    }
  }

  // Reduced incidence: drop the smallest vertex of each component.
  const std::uint32_t V = g.vertex_count();
  std::vector<std::uint32_t> comp(V);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&comp](std::uint32_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const auto a = find(e.tail), b = find(e.head);
    if (a != b) comp[std::max(a, b)] = std::min(a, b);
  }
  std::vector<long> row_of(V, -1);
  std::size_t rows = 0;
  for (std::uint32_t v = 0; v < V; ++v) {
    if (find(v) != v) row_of[v] = static_cast<long>(rows++);
  }
  ctx.graph_matrix = SymbolicMatrix(E + rows, E);
  for (std::size_t k = 0; k < E; ++k) {
    ctx.graph_matrix.at(k, k) = MPoly::variable(E, k);
    const Edge& e = g.edge(ctx.order[k]);
    if (e.is_self_loop()) continue;
    if (row_of[e.head] >= 0) {
      const std::size_t r = E + static_cast<std::size_t>(row_of[e.head]);
      ctx.graph_matrix.at(r, k) = MPoly::constant(E, 1);
      ctx.graph_matrix.at(k, r) = MPoly::constant(E, 1);
    }
    if (row_of[e.tail] >= 0) {
      const std::size_t r = E + static_cast<std::size_t>(row_of[e.tail]);
      ctx.graph_matrix.at(r, k) = MPoly::constant(E, -1);
      ctx.graph_matrix.at(k, r) = MPoly::constant(E, -1);
    }
  }
  return ctx;
}

MPoly dodgson(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  return minor_of(ctx.matrix, rows, cols);
}

MPoly graph_dodgson(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  for (auto i : rows) {
    if (i >= ctx.variable_count()) throw ValidationError("graph Dodgson index must be an edge");
  }
  for (auto i : cols) {
    if (i >= ctx.variable_count()) throw ValidationError("graph Dodgson index must be an edge");
  }
  return minor_of(ctx.graph_matrix, rows, cols);
}

DodgsonIdentity dodgson_identity_holds(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols, std::size_t k,
                                       std::size_t l, bool graph_matrix) {
  const std::size_t limit = graph_matrix ? ctx.variable_count() : ctx.loops();
  if (k == l) throw ValidationError("Dodgson identity needs k != l");
  if (k >= limit || l >= limit) throw ValidationError("Dodgson identity index out of range");
  for (auto x : {k, l}) {
    if (std::find(rows.begin(), rows.end(), x) != rows.end() ||
        std::find(cols.begin(), cols.end(), x) != cols.end()) {
      throw ValidationError("k and l must not lie in I or J");
    }
  }
  auto minor = [&](const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
    return graph_matrix ? graph_dodgson(ctx, r, c) : dodgson(ctx, r, c);
  };
  const MPoly psi = minor(rows, cols);
  const MPoly upper_kl = partial(partial(psi, k), l);
  const MPoly lower_kl = substitute(substitute(psi, k, 0), l, 0);
  const MPoly upper_k_lower_l = substitute(partial(psi, k), l, 0);
  const MPoly upper_l_lower_k = substitute(partial(psi, l), k, 0);
  const MPoly lhs = upper_kl * lower_kl - upper_k_lower_l * upper_l_lower_k;

  auto with = [](std::vector<std::size_t> v, std::size_t x) {
    v.push_back(x);
    std::sort(v.begin(), v.end());
    return v;
  };
  const MPoly rhs = minor(with(rows, k), with(cols, l)) * minor(with(rows, l), with(cols, k));
  DodgsonIdentity out;
  if (lhs == rhs) {
    out.holds = true;
    out.sign = 1;
  } else if (lhs == -rhs) {
    out.holds = true;
    out.sign = -1;
  }
  return out;
}

}  // namespace graphpoly
