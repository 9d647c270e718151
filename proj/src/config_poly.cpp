#include "graphpoly/config_poly.hpp"

#include <algorithm>

#include "graphpoly/errors.hpp"

namespace graphpoly {
namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

mpq_class square_determinant(RationalMatrix m) {
  const std::size_t d = m.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < d; ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  RationalMatrix copy = m;
  return rref(copy, m.front().size()).size();
}

Configuration::Configuration(std::size_t edge_count, RationalMatrix basis)
    : edges_(edge_count), basis_(std::move(basis)) {
  if (edges_ > kMaxVariables) throw ValidationError("configuration has too many edges");
  for (const auto& row : basis_) {
    if (row.size() != edges_) throw ValidationError("basis row length differs from edge count");
  }
  if (rank(basis_) != basis_.size()) throw ValidationError("basis matrix is rank deficient");
}

Configuration graph_configuration(const Graph& g) {
  const IntMatrix c = cycle_basis(g, first_spanning_forest(g));
  RationalMatrix m;
  for (const auto& row : c) m.emplace_back(row.begin(), row.end());
  return Configuration(g.edge_count(), std::move(m));
}

ConfigPolynomial configuration_polynomial(const Configuration& c) {
  const std::size_t d = c.dim();
  const std::size_t E = c.edge_count();
  // Scale each row to integers.
  std::vector<std::vector<mpz_class>> rows(d);
  mpz_class denominators = 1;
  for (std::size_t i = 0; i < d; ++i) {
    mpz_class lcm = 1;
    for (const auto& x : c.basis()[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    denominators *= lcm;
    for (const auto& x : c.basis()[i]) {
      const mpq_class scaled = x * lcm;
      rows[i].push_back(scaled.get_num());
    }
  }
  SymbolicMatrix m(d, E);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      std::vector<MPoly::Term> terms;
      for (std::size_t e = 0; e < E; ++e) {
        mpz_class w = rows[i][e] * rows[j][e];
        if (w == 0) continue;
        Monomial mono;
        mono.exp[e] = 1;
        terms.push_back({mono, std::move(w)});
      }
      m.at(i, j) = MPoly::from_terms(E, std::move(terms));
      m.at(j, i) = m.at(i, j);
    }
  }
  ConfigPolynomial out{determinant(m), mpq_class(1, 1)};
  out.scale = mpq_class(mpz_class(1), denominators * denominators);
  out.scale.canonicalize();
  return out;
}

bool pluecker_coefficient_check(const Configuration& c) {
  const std::size_t d = c.dim();
  const std::size_t E = c.edge_count();
  const ConfigPolynomial psi = configuration_polynomial(c);
  std::size_t nonzero = 0;
  std::vector<bool> pick(E, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    std::vector<std::size_t> vars;
    for (std::size_t e = 0; e < E; ++e) {
      if (pick[e]) vars.push_back(e);
    }
    RationalMatrix sub(d, std::vector<mpq_class>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) sub[i][j] = c.basis()[i][vars[j]];
    }
    const mpq_class minor = square_determinant(sub);
    const mpq_class coef = psi.scale * mpq_class(coefficient_of_squarefree_monomial(psi.poly, vars));
    if (coef != minor * minor) return false;
    if (minor != 0) ++nonzero;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return nonzero == psi.poly.term_count();
}

Configuration dual_configuration(const Configuration& c) {
  const std::size_t E = c.edge_count();
  RationalMatrix m = c.basis();
  const auto pivots = rref(m, E);
  std::vector<bool> is_pivot(E, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix null;
  for (std::size_t f = 0; f < E; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(E, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    null.push_back(std::move(v));
  }
  return Configuration(E, std::move(null));
}

bool same_row_space(const Configuration& a, const Configuration& b) {
  if (a.edge_count() != b.edge_count() || a.dim() != b.dim()) return false;
  RationalMatrix both = a.basis();
  both.insert(both.end(), b.basis().begin(), b.basis().end());
  return rank(both) == a.dim();
}

MPoly support_reversal(const MPoly& p) {
  if (!p.is_multilinear()) throw ValidationError("support reversal needs a multilinear polynomial");
  std::vector<MPoly::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < p.variable_count(); ++v) m.exp[v] = t.mono.exp[v] ? 0 : 1;
    terms.push_back({m, t.coef});
  }
  return MPoly::from_terms(p.variable_count(), std::move(terms));
}

FunctionalEquation functional_equation_check(const Configuration& c) {
  const ConfigPolynomial lhs = configuration_polynomial(c);
  const ConfigPolynomial dual = configuration_polynomial(dual_configuration(c));
  const MPoly reversed = support_reversal(dual.poly);
  FunctionalEquation out;
  if (lhs.poly.is_zero() || reversed.is_zero()) return out;
  const auto& a = lhs.poly.leading_term();
  const auto& b = reversed.leading_term();
  if (!(a.mono == b.mono)) return out;
  // scale_V * P_V * lambda = scale_W * rev(P_W)
  out.lambda = dual.scale * mpq_class(b.coef) / (lhs.scale * mpq_class(a.coef));
  out.holds = lhs.poly * b.coef == reversed * a.coef;
  return out;
}

}  // namespace graphpoly
