#include "period_oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "graphpoly/graph_poly.hpp"

namespace oracle {
namespace {

struct Linear4 {
  // Psi = A0 A1 c11 + A0 c10 + A1 c01 + c00, each c a polynomial in the rest.
  graphpoly::MPoly c11, c10, c01, c00;
};

double eval(const graphpoly::MPoly& p, const std::vector<double>& a) {
  double s = 0;
  for (const auto& t : p.terms()) {
    double v = t.coef.get_d();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (unsigned k = 0; k < t.mono.exp[i]; ++k) v *= a[i];
    }
    s += v;
  }
  return s;
}

// Integral over A1 >= 0 of 1/((alpha A + beta)(gamma A + delta)).
double pair_integral(double alpha, double beta, double gamma, double delta) {
  const double x = alpha * delta, y = beta * gamma;
  const double r = x / y - 1;
  if (std::abs(r) < 1e-5) return (1 - r / 2 + r * r / 3) / y;
  return std::log(x / y) / (x - y);
}

}  // namespace

double chart_integral(const graphpoly::Graph& g, double h) {
  using graphpoly::MPoly;
  const std::size_t e = g.edge_count();
  if (e < 3) throw std::invalid_argument("oracle needs at least 3 edges");
  // Chart A_{e-1} = 1.
  MPoly psi = graphpoly::substitute(graphpoly::psi_spanning_trees(g), e - 1, mpz_class(1));
  if (!psi.is_multilinear()) throw std::invalid_argument("oracle needs a multilinear Psi");
  const mpz_class zero = 0;
  const MPoly a = graphpoly::partial(psi, 0), b = graphpoly::substitute(psi, 0, zero);
  const Linear4 l{graphpoly::partial(a, 1), graphpoly::substitute(a, 1, zero), graphpoly::partial(b, 1),
                  graphpoly::substitute(b, 1, zero)};

  const std::size_t rest = e - 3;
  std::vector<double> nodes, weights;
  for (double t = -5; t <= 5 + 1e-12; t += h) {
    const double s = std::numbers::pi / 2 * std::sinh(t);
    const double x = std::exp(s);
    const double w = x * std::numbers::pi / 2 * std::cosh(t) * h;
    if (w < 1e-300 || !std::isfinite(w) || x > 1e150) continue;
    nodes.push_back(x);
    weights.push_back(w);
  }
  std::vector<std::size_t> idx(rest, 0);
  std::vector<double> point(e, 0.0);
  double total = 0;
  while (true) {
    double w = 1;
    for (std::size_t i = 0; i < rest; ++i) {
      point[2 + i] = nodes[idx[i]];
      w *= weights[idx[i]];
    }
    const double alpha = eval(l.c11, point), beta = eval(l.c10, point);
    const double gamma = eval(l.c01, point), delta = eval(l.c00, point);
    // Psi = A0 (alpha A1 + beta) + (gamma A1 + delta); the A0 integral gives
    // 1 / ((alpha A1 + beta)(gamma A1 + delta)).
    total += w * pair_integral(alpha, beta, gamma, delta);
    std::size_t k = 0;
    while (k < rest && ++idx[k] == nodes.size()) idx[k++] = 0;
    if (k == rest) break;
  }
  return total;
}

}  // namespace oracle
