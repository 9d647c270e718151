#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

// Sum over spanning forests T of prod_{e not in T} A_e. Variable i is edge i.
// Refuses E > 24.
MPoly psi_spanning_trees(const Graph& g);

// det(C diag(A) C^T) for the fundamental cycle matrix C of `tree`
// (default: first_spanning_forest).
MPoly psi_determinant(const Graph& g);
MPoly psi_determinant(const Graph& g, const Subgraph& tree);

// For a bridge e, g minus e has more components than g and no spanning
// forest of g avoids e, so the deletion term is 0 (the forest polynomial of
// g minus e would double count).
struct ContractionDeletion {
  MPoly deletion;     // Psi of g minus e, in E-1 variables; zero for a bridge
  MPoly contraction;  // Psi of g/e, in E-1 variables; zero for a self-loop
  // Old edge index -> index in the minors; nullopt for e.
  std::vector<std::optional<std::size_t>> edge_map;
  bool bridge = false;
  bool identity_holds = false;  // Psi = A_e * deletion + contraction
};

ContractionDeletion contraction_deletion(const Graph& g, std::size_t e);

// Symmetric matrix of a fixed spanning forest with the non-tree edges first.
// Variable k of `matrix` is edge order[k] of `graph`; variables 0..h1-1 (the
// non-tree edges) occur only on the diagonal.
struct DodgsonContext {
  Graph graph;
  EdgeSet tree;
  std::vector<std::size_t> order;
  SymbolicMatrix matrix;
  // [[diag(A), B^T], [B, 0]] with B the reduced incidence matrix, in the
  // same variables. Its determinant is +-Psi; its minors give Dodgson
  // polynomials indexed by any edges.
  SymbolicMatrix graph_matrix;

  std::size_t loops() const { return matrix.dim(); }
  std::size_t variable_count() const { return order.size(); }
  // Psi in the reordered variables.
  MPoly psi() const;
};

DodgsonContext dodgson_form(const Graph& g, const Subgraph& tree);
// Uses first_spanning_forest.
DodgsonContext dodgson_form(const Graph& g);

// Minor of ctx.matrix with rows I and columns J removed (0-based, kept rows
// and columns in increasing order, no extra sign).
MPoly dodgson(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols);

// Same, on ctx.graph_matrix: indices are reordered edge positions < E.
MPoly graph_dodgson(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols);

struct DodgsonIdentity {
  bool holds = false;
  int sign = 0;  // LHS = sign * psi(I+k, J+l) psi(I+l, J+k)
};

// psi^{kl} psi_{kl} - psi^k_l psi^l_k = +-psi(I+k, J+l) psi(I+l, J+k) with
// psi = psi(I, J), superscripts derivatives and subscripts A = 0.
// Indices < h1 use ctx.matrix; graph_matrix = true uses edge indices.
DodgsonIdentity dodgson_identity_holds(const DodgsonContext& ctx, const std::vector<std::size_t>& rows,
                                       const std::vector<std::size_t>& cols, std::size_t k,
                                       std::size_t l, bool graph_matrix = false);

}  // namespace graphpoly
