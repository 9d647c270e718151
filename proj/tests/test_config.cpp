#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "graphpoly/config_poly.hpp"
#include "graphpoly/errors.hpp"
#include "graphpoly/graph_poly.hpp"

using namespace graphpoly;

namespace {

RationalMatrix random_basis(std::mt19937_64& rng, std::size_t d, std::size_t e) {
  for (;;) {
    RationalMatrix m(d, std::vector<mpq_class>(e));
    for (auto& row : m) {
      for (auto& x : row) {
        x = mpq_class(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
        x.canonicalize();
      }
    }
    if (rank(m) == d) return m;
  }
}

}  // namespace

TEST_CASE("configuration polynomial examples") {
  const auto one = configuration_polynomial(Configuration(1, {{1}}));
  CHECK(to_string(one.poly) == "A1");
  CHECK(one.scale == 1);
  const auto tri = configuration_polynomial(Configuration(3, {{1, 1, 1}}));
  CHECK(to_string(tri.poly) == "A1 + A2 + A3");
  const auto k4 = configuration_polynomial(graph_configuration(corpus::k4()));
  CHECK(k4.scale == 1);
  CHECK(k4.poly == psi_spanning_trees(corpus::k4()));
  CHECK_THROWS_AS(Configuration(3, {{1, 1, 1}, {2, 2, 2}}), ValidationError);
  CHECK_THROWS_AS(Configuration(3, {{1, 1}}), ValidationError);
  // Rational entries: Psi = scale * poly.
  const auto half = configuration_polynomial(Configuration(2, {{mpq_class(1, 2), 1}}));
  CHECK(half.scale == mpq_class(1, 4));
  CHECK(to_string(half.poly) == "A1 + 4*A2");
}

TEST_CASE("graph configurations match Psi") {
  for (const auto& [name, g] : corpus::standard_up_to(10)) {
    const auto c = configuration_polynomial(graph_configuration(g));
    CHECK(c.scale == 1);
    CHECK_MESSAGE(c.poly == psi_spanning_trees(g), name);
  }
}

TEST_CASE("Pluecker coefficients") {
  for (const auto& [name, g] : corpus::standard_up_to(8)) {
    const Configuration c = graph_configuration(g);
    CHECK(pluecker_coefficient_check(c));
    const MPoly psi = configuration_polynomial(c).poly;
    for (const auto& t : psi.terms()) CHECK(t.coef == 1);
  }
  // Scaling a column by 2 scales its monomials by 4.
  const Configuration base(3, {{1, 1, 1}});
  const Configuration scaled(3, {{2, 1, 1}});
  CHECK(pluecker_coefficient_check(scaled));
  CHECK(to_string(configuration_polynomial(scaled).poly) == "4*A1 + A2 + A3");
  RationalMatrix id(4, std::vector<mpq_class>(4, 0));
  for (std::size_t i = 0; i < 4; ++i) id[i][i] = 1;
  const Configuration full(4, id);
  CHECK(pluecker_coefficient_check(full));
  CHECK(to_string(configuration_polynomial(full).poly) == "A1*A2*A3*A4");

  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t e = 2 + rng() % 6;
    const std::size_t d = 1 + rng() % e;
    CHECK(pluecker_coefficient_check(Configuration(e, random_basis(rng, d, e))));
  }
}

TEST_CASE("basis change multiplies Psi by the squared determinant") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t e = 3 + rng() % 4;
    const std::size_t d = 2;
    const RationalMatrix b = random_basis(rng, d, e);
    const RationalMatrix g = random_basis(rng, d, d);
    RationalMatrix gb(d, std::vector<mpq_class>(e, 0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t k = 0; k < d; ++k) gb[i][j] += g[i][k] * b[k][j];
      }
    }
    const mpq_class det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    const auto p = configuration_polynomial(Configuration(e, b));
    const auto q = configuration_polynomial(Configuration(e, gb));
    // scale_q * q = det^2 * scale_p * p
    const mpq_class ratio = det * det * p.scale / q.scale;
    CHECK(q.poly * ratio.get_den() == p.poly * ratio.get_num());
  }
}

TEST_CASE("dual configuration") {
  const Configuration tri(3, {{1, 1, 1}});
  const Configuration dual = dual_configuration(tri);
  CHECK(dual.dim() == 2);
  const auto dp = configuration_polynomial(dual);
  // Equal to A1A2 + A1A3 + A2A3 up to a constant.
  const MPoly expect = psi_spanning_trees(corpus::banana(3));
  const mpz_class c = dp.poly.leading_term().coef;
  CHECK(dp.poly == expect * c);
  CHECK(same_row_space(dual_configuration(dual), tri));
  RationalMatrix id(3, std::vector<mpq_class>(3, 0));
  for (std::size_t i = 0; i < 3; ++i) id[i][i] = 1;
  const Configuration empty = dual_configuration(Configuration(3, id));
  CHECK(empty.dim() == 0);
  CHECK(configuration_polynomial(empty).poly == MPoly::constant(3, 1));

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t e = 3 + rng() % 5;
    const std::size_t d = 1 + rng() % (e - 1);
    const Configuration c(e, random_basis(rng, d, e));
    const Configuration w = dual_configuration(c);
    CHECK(w.dim() == e - d);
    for (const auto& u : c.basis()) {
      for (const auto& v : w.basis()) {
        mpq_class dot = 0;
        for (std::size_t i = 0; i < e; ++i) dot += u[i] * v[i];
        CHECK(dot == 0);
      }
    }
    CHECK(same_row_space(dual_configuration(w), c));
  }
}

TEST_CASE("functional equation") {
  const auto tri = functional_equation_check(Configuration(3, {{1, 1, 1}}));
  CHECK(tri.holds);
  CHECK(tri.lambda == 1);
  const auto ban = functional_equation_check(graph_configuration(corpus::banana(3)));
  CHECK(ban.holds);
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t e = 3 + rng() % 6;
    const std::size_t d = 2 + rng() % (e - 2);
    const auto r = functional_equation_check(Configuration(e, random_basis(rng, d, e)));
    CHECK(r.holds);
    CHECK(r.lambda != 0);
  }
  // A wrong partner fails: reversing Psi of an unrelated configuration.
  const MPoly psi = configuration_polynomial(Configuration(3, {{1, 1, 1}})).poly;
  CHECK(support_reversal(psi) != psi);
}
