#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

// Hub 0 and rim 1..n. Spokes (0,i) are edges 0..n-1, rim edges (i,i+1)
// are n..2n-1 with (n,1) last. Requires n >= 3.
Graph wheel(std::uint32_t n);

// The 7-vertex, 12-edge, 6-loop example graph, vertices shifted to 0-based.
Graph example_graph_12();

// Wheel matrices in two coordinate systems.
//   matrix_T:  variables T_1..T_{2n} (index k-1 = edge k-1 of wheel(n)),
//              diagonal T_p + T_{p+1} + T_{n+p}, off-diagonal -T_{p+1},
//              corner -T_1.
//   matrix_AB: variables A_0..A_{n-1} (indices 0..n-1) and B_0..B_{n-1}
//              (indices n..2n-1); B on the diagonal, A_i at (i, i+1), A_{n-1}
//              in the corners.
// substitution[v] is the image of AB-variable v in the T ring:
//   B_i = T_{i+1} + T_{(i+1 mod n)+1} + T_{i+1+n},  A_i = -T_{(i+1 mod n)+1}.
struct WheelContext {
  std::uint32_t n = 0;
  Graph graph;
  SymbolicMatrix matrix_T;
  SymbolicMatrix matrix_AB;
  std::vector<MPoly> substitution;

  std::size_t a(std::size_t i) const { return i; }
  std::size_t b(std::size_t i) const { return n + i; }
  std::vector<std::string> ab_names() const;
  std::vector<std::string> t_names() const;
};

inline constexpr std::uint32_t kVerifiedWheelLimit = 10;

// Builds both matrices. For n <= kVerifiedWheelLimit also verifies
// det(matrix_T) = Psi(wheel(n)) and det(matrix_AB) o substitution =
// det(matrix_T), throwing InternalError otherwise.
WheelContext wheel_context(std::uint32_t n);

// Psi_n(A, B) = det(matrix_AB).
MPoly wheel_psi(const WheelContext& ctx);

// Q_p(i): tridiagonal determinant with B_i..B_{i+p-1} on the diagonal and
// A_i..A_{i+p-2} beside it. Q_0 = 1. Requires i + p <= n.
MPoly wheel_Q(const WheelContext& ctx, std::size_t p, std::size_t start);

// K_n = Psi_n - B_0 Q_{n-1}(1).
MPoly wheel_K(const WheelContext& ctx);

struct WheelIdentities {
  bool substitution = false;    // det(matrix_AB) o subst = Psi(wheel(n))(T)
  bool decomposition = false;   // Psi_n = B_0 Q_{n-1}(1) + K_n
  bool left_recurrence = false; // Q_{n-1}(1) = B_1 Q_{n-2}(2) - A_1^2 Q_{n-3}(3)
  bool right_recurrence = false;// Q_{n-1}(1) = B_{n-1} Q_{n-2}(1) - A_{n-2}^2 Q_{n-3}(1)
  bool corner_form = false;     // K_n = -A_0^2 Q_{n-2}(2) - A_{n-1}^2 Q_{n-2}(1) + 2(-1)^{n-1} A_0..A_{n-1}
  bool discriminant = false;    // Q_{n-2}(2) Q_{n-2}(1) - (A_1..A_{n-2})^2 = Q_{n-3}(2) Q_{n-1}(1)

  bool all() const {
    return substitution && decomposition && left_recurrence && right_recurrence && corner_form &&
           discriminant;
  }
};

WheelIdentities wheel_identities(std::uint32_t n);

// Decomposition, both recurrences and the corner form.
bool wheel_recurrence_check(std::uint32_t n);
// The product form of Q_{n-2}(2) Q_{n-2}(1) - (A_1..A_{n-2})^2.
bool wheel_discriminant_check(std::uint32_t n);

}  // namespace graphpoly
