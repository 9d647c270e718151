#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "graphpoly/errors.hpp"
#include "graphpoly/families.hpp"
#include "graphpoly/graph_poly.hpp"

using namespace graphpoly;

namespace {

MPoly var(std::size_t n, std::size_t i) { return MPoly::variable(n, i); }

}  // namespace

TEST_CASE("Psi of small graphs") {
  const MPoly tri = psi_spanning_trees(corpus::triangle());
  CHECK(to_string(tri) == "A1 + A2 + A3");
  CHECK(psi_determinant(corpus::triangle()) == tri);
  CHECK(to_string(psi_spanning_trees(corpus::bubble())) == "A1 + A2");
  const Graph loops(1, {{0, 0}, {0, 0}});
  CHECK(to_string(psi_spanning_trees(loops)) == "A1*A2");
  CHECK(to_string(psi_determinant(loops)) == "A1*A2");
  const MPoly k4 = psi_determinant(corpus::k4());
  CHECK(k4.term_count() == 16);
  CHECK(k4.total_degree() == 3);
  CHECK(k4.is_multilinear());
  const MPoly two = psi_determinant(disjoint_union(corpus::triangle(), corpus::triangle()));
  CHECK(two == (var(6, 0) + var(6, 1) + var(6, 2)) * (var(6, 3) + var(6, 4) + var(6, 5)));
  // A tree has Psi = 1.
  CHECK(psi_determinant(Graph(3, {{0, 1}, {1, 2}})) == MPoly::constant(2, 1));
}

TEST_CASE("both routes agree on every corpus graph and orientation") {
  std::mt19937_64 rng(1);
  for (const auto& [name, g] : corpus::standard()) {
    const MPoly trees = psi_spanning_trees(g);
    CHECK_MESSAGE(trees == psi_determinant(g), name);
    for (const auto& t : trees.terms()) CHECK(t.coef == 1);
    CHECK(trees.is_homogeneous());
    CHECK(trees.total_degree() == static_cast<int>(loop_rank(g)));
    // A different forest and flipped orientations give the same polynomial.
    const auto forests = spanning_forests(g);
    const Subgraph& other = forests[rng() % forests.size()];
    CHECK(psi_determinant(g, other) == trees);
    std::vector<Edge> flipped = g.edges();
    for (auto& e : flipped) {
      if (rng() % 2) std::swap(e.tail, e.head);
    }
    CHECK(psi_determinant(Graph(g.vertex_count(), flipped)) == trees);
  }
}

TEST_CASE("contraction-deletion") {
  const Graph t = corpus::triangle();
  for (std::size_t e = 0; e < 3; ++e) {
    const auto cd = contraction_deletion(t, e);
    CHECK(cd.identity_holds);
    CHECK(cd.deletion == MPoly::constant(2, 1));
    CHECK(to_string(cd.contraction) == "A1 + A2");
  }
  const Graph tad(2, {{0, 1}, {1, 1}, {0, 1}});
  const auto cd = contraction_deletion(tad, 1);
  CHECK(cd.identity_holds);
  CHECK(cd.contraction.is_zero());
  CHECK(cd.deletion == psi_determinant(corpus::bubble()));
  CHECK_THROWS_AS(contraction_deletion(t, 3), ValidationError);
  // Bridge: no spanning tree avoids it.
  const Graph lollipop(3, {{0, 1}, {0, 1}, {1, 2}});
  const auto br = contraction_deletion(lollipop, 2);
  CHECK(br.bridge);
  CHECK(br.deletion.is_zero());
  CHECK(br.identity_holds);

  for (const auto& [name, g] : corpus::standard()) {
    for (std::size_t e = 0; e < g.edge_count(); ++e) CHECK_MESSAGE(contraction_deletion(g, e).identity_holds, name);
  }
}

TEST_CASE("vertex joins multiply") {
  const auto graphs = corpus::standard_up_to(5);
  for (std::size_t i = 0; i + 1 < graphs.size(); i += 7) {
    const Graph& a = graphs[i].graph;
    const Graph& b = graphs[i + 1].graph;
    const Graph j = vertex_join(a, 0, b, b.vertex_count() - 1);
    const std::size_t E = j.edge_count();
    std::vector<std::optional<std::size_t>> left(a.edge_count()), right(b.edge_count());
    for (std::size_t e = 0; e < a.edge_count(); ++e) left[e] = e;
    for (std::size_t e = 0; e < b.edge_count(); ++e) right[e] = a.edge_count() + e;
    CHECK(psi_determinant(j) ==
          rename_variables(psi_determinant(a), E, left) * rename_variables(psi_determinant(b), E, right));
  }
}

TEST_CASE("tree normal form") {
  const Graph k = corpus::k4();
  // Spoke tree {0,1,2}: the rim edges come first.
  const auto ctx = dodgson_form(k, make_subgraph(k, {0, 1, 2}));
  CHECK(ctx.loops() == 3);
  CHECK(ctx.matrix.is_symmetric());
  CHECK(ctx.order == std::vector<std::size_t>{3, 4, 5, 0, 1, 2});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const std::uint32_t used = ctx.matrix.at(i, j).variables_used();
      for (std::size_t v = 0; v < 3; ++v) CHECK((((used >> v) & 1u) == 0 || (i == j && i == v)));
    }
  }
  std::vector<std::optional<std::size_t>> to_order(6);
  for (std::size_t k2 = 0; k2 < 6; ++k2) to_order[ctx.order[k2]] = k2;
  CHECK(ctx.psi() == rename_variables(psi_determinant(k), 6, to_order));

  const Graph t = corpus::triangle();
  const auto tri = dodgson_form(t, make_subgraph(t, {1, 2}));
  REQUIRE(tri.loops() == 1);
  CHECK(to_string(tri.matrix.at(0, 0)) == "A1 + A2 + A3");
  CHECK_THROWS_AS(dodgson_form(t, make_subgraph(t, {1})), ValidationError);

  for (const auto& [name, g] : corpus::standard_up_to(10)) {
    const auto c = dodgson_form(g);
    std::vector<std::optional<std::size_t>> inv(g.edge_count());
    for (std::size_t v = 0; v < g.edge_count(); ++v) inv[c.order[v]] = v;
    const MPoly psi = rename_variables(psi_spanning_trees(g), g.edge_count(), inv);
    CHECK(c.psi() == psi);
    const MPoly gm = determinant(c.graph_matrix);
    CHECK((gm == psi || gm == -psi));
  }
}

TEST_CASE("wheel T-matrix is the spoke-tree normal form") {
  for (std::uint32_t n = 3; n <= 6; ++n) {
    const WheelContext w = wheel_context(n);
    EdgeSet spokes;
    for (std::size_t i = 0; i < n; ++i) spokes.set(i);
    const auto ctx = dodgson_form(w.graph, Subgraph(w.graph, spokes));
    std::vector<std::optional<std::size_t>> back(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) back[k] = ctx.order[k];
    CHECK(rename_variables(ctx.psi(), 2 * n, back) == determinant(w.matrix_T));
    // Diagonals agree entry by entry.
    for (std::size_t p = 0; p < n; ++p) {
      CHECK(rename_variables(ctx.matrix.at(p, p), 2 * n, back) == w.matrix_T.at(p, p));
    }
  }
}

TEST_CASE("Dodgson minors") {
  // Generic symmetric 2x2: [[A1 + c, b], [b, A2 + d]] with b = A3, c = A4, d = A5.
  const Graph k = corpus::k4();
  const auto ctx = dodgson_form(k);
  CHECK(dodgson(ctx, {}, {}) == ctx.psi());
  CHECK(dodgson(ctx, {0, 1, 2}, {0, 1, 2}) == MPoly::constant(6, 1));
  // Symmetric matrix: transposed index sets give the same minor.
  CHECK(dodgson(ctx, {0}, {1}) == dodgson(ctx, {1}, {0}));
  CHECK(dodgson(ctx, {0}, {0}) == partial(ctx.psi(), 0));
  CHECK_THROWS_AS(dodgson(ctx, {0}, {}), ValidationError);
  CHECK_THROWS_AS(dodgson(ctx, {3}, {0}), ValidationError);
}

TEST_CASE("Dodgson minor of a generic 2x2 symmetric matrix") {
  DodgsonContext ctx;
  const std::size_t n = 5;
  ctx.order = {0, 1, 2, 3, 4};
  ctx.matrix = SymbolicMatrix(2, n);
  ctx.matrix.at(0, 0) = var(n, 0) + var(n, 3);
  ctx.matrix.at(1, 1) = var(n, 1) + var(n, 4);
  ctx.matrix.at(0, 1) = var(n, 2);
  ctx.matrix.at(1, 0) = var(n, 2);
  CHECK(dodgson(ctx, {0}, {1}) == var(n, 2));
  const auto id = dodgson_identity_holds(ctx, {}, {}, 0, 1);
  CHECK(id.holds);
  CHECK(id.sign == -1);
}

TEST_CASE("Dodgson identity on K4") {
  const auto ctx = dodgson_form(corpus::k4());
  const auto a = dodgson_identity_holds(ctx, {}, {}, 0, 1);
  CHECK(a.holds);
  const auto b = dodgson_identity_holds(ctx, {2}, {2}, 0, 1);
  CHECK(b.holds);
  CHECK_THROWS_AS(dodgson_identity_holds(ctx, {0}, {0}, 0, 1), ValidationError);
  CHECK_THROWS_AS(dodgson_identity_holds(ctx, {}, {}, 1, 1), ValidationError);
  // Edge-indexed minors of the graph matrix.
  const auto c = dodgson_identity_holds(ctx, {0}, {1}, 2, 3, true);
  CHECK(c.holds);
}

TEST_CASE("graph-matrix minors match symmetric-matrix minors up to sign") {
  for (const auto& [name, g] : corpus::standard_up_to(9)) {
    const auto ctx = dodgson_form(g);
    if (ctx.loops() < 2) continue;
    for (std::size_t i = 0; i < ctx.loops(); ++i) {
      for (std::size_t j = 0; j < ctx.loops(); ++j) {
        const MPoly a = dodgson(ctx, {i}, {j});
        const MPoly b = graph_dodgson(ctx, {i}, {j});
        CHECK_MESSAGE((a == b || a == -b), name);
      }
    }
  }
}
