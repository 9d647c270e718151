#include "corpus.hpp"
#include "doctest.h"
#include "graphpoly/errors.hpp"
#include "graphpoly/families.hpp"
#include "graphpoly/graph_poly.hpp"

using namespace graphpoly;

TEST_CASE("wheel graphs") {
  const Graph k4 = wheel(3);
  CHECK(k4.vertex_count() == 4);
  // Every pair of the four vertices is adjacent exactly once.
  std::vector<std::vector<int>> adj(4, std::vector<int>(4, 0));
  for (const auto& e : k4.edges()) {
    ++adj[e.tail][e.head];
    ++adj[e.head][e.tail];
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(adj[a][b] == (a == b ? 0 : 1));
  }
  CHECK(spanning_forests(k4).size() == 16);
  const Graph w4 = wheel(4);
  CHECK(w4.edge_count() == 8);
  CHECK(w4.vertex_count() == 5);
  CHECK(loop_rank(w4) == 4);
  CHECK_THROWS_AS(wheel(2), ValidationError);
}

TEST_CASE("example graph") {
  const Graph g = example_graph_12();
  CHECK(g.edge_count() == 12);
  CHECK(g.vertex_count() == 7);
  CHECK(loop_rank(g) == 6);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(11) == Edge{3, 0});
  const auto r = is_primitive_divergent(g);
  CHECK(r.count_matches);
  CHECK(r.primitive);
}

TEST_CASE("wheel matrices for n = 3") {
  const WheelContext ctx = wheel_context(3);
  auto A = [&](std::size_t i) { return MPoly::variable(6, ctx.a(i)); };
  auto B = [&](std::size_t i) { return MPoly::variable(6, ctx.b(i)); };
  const MPoly expect = B(0) * B(1) * B(2) - B(0) * A(1) * A(1) - B(1) * A(2) * A(2) -
                       B(2) * A(0) * A(0) + A(0) * A(1) * A(2) * 2;
  CHECK(wheel_psi(ctx) == expect);
  CHECK(compose(wheel_psi(ctx), ctx.substitution) == psi_spanning_trees(ctx.graph));
  CHECK(wheel_K(ctx) == -(A(0) * A(0) * B(2)) - A(2) * A(2) * B(1) + A(0) * A(1) * A(2) * 2);
  CHECK(to_string(wheel_psi(ctx), ctx.ab_names()).find("2*A0*A1*A2") != std::string::npos);
}

TEST_CASE("Q polynomials") {
  const WheelContext ctx = wheel_context(5);
  auto A = [&](std::size_t i) { return MPoly::variable(10, ctx.a(i)); };
  auto B = [&](std::size_t i) { return MPoly::variable(10, ctx.b(i)); };
  for (std::size_t i = 0; i < 5; ++i) CHECK(wheel_Q(ctx, 1, i) == B(i));
  CHECK(wheel_Q(ctx, 0, 5) == MPoly::constant(10, 1));
  CHECK(wheel_Q(ctx, 2, 1) == B(1) * B(2) - A(1) * A(1));
  CHECK_THROWS_AS(wheel_Q(ctx, 3, 3), ValidationError);
}

TEST_CASE("corner term of Psi_5") {
  const WheelContext ctx = wheel_context(5);
  Monomial corner;
  for (std::size_t i = 0; i < 5; ++i) corner.exp[ctx.a(i)] = 1;
  mpz_class coef = 0;
  const MPoly psi = wheel_psi(ctx);
  for (const auto& t : psi.terms()) {
    if (t.mono == corner) coef = t.coef;
  }
  CHECK(coef == 2);  // 2 (-1)^{n-1} with n = 5
}

TEST_CASE("wheel identities n = 3..8") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    const auto r = wheel_identities(n);
    CHECK_MESSAGE(r.substitution, n);
    CHECK_MESSAGE(r.decomposition, n);
    CHECK_MESSAGE(r.left_recurrence, n);
    CHECK_MESSAGE(r.right_recurrence, n);
    CHECK_MESSAGE(r.corner_form, n);
    CHECK_MESSAGE(r.discriminant, n);
  }
  CHECK(wheel_recurrence_check(4));
  CHECK(wheel_discriminant_check(6));
}

TEST_CASE("shifting the off-diagonal index the other way does not reproduce Psi") {
  // Kept as a record of the convention: the T-matrix is the reference.
  const WheelContext ctx = wheel_context(5);
  auto subst = ctx.substitution;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::size_t k = (i + 5 - 2) % 5;  // T index in 0..n-1, read as T_k with T_0 = T_n
    subst[ctx.a(i)] = -MPoly::variable(10, (k == 0 ? 5 : k) - 1);
  }
  CHECK(compose(wheel_psi(ctx), subst) != psi_determinant(ctx.graph));
}
