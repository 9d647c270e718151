#include "graphpoly/families.hpp"

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_poly.hpp"

namespace graphpoly {
namespace {

void check_n(std::uint32_t n) {
  if (n < 3) throw ValidationError("wheel needs n >= 3 spokes");
  if (2 * n > kMaxVariables) throw ValidationError("wheel supports at most 16 spokes");
}

}  // namespace

Graph wheel(std::uint32_t n) {
  check_n(n);
  std::vector<Edge> edges;
  for (std::uint32_t i = 1; i <= n; ++i) edges.push_back({0, i});
  for (std::uint32_t i = 1; i <= n; ++i) edges.push_back({i, i == n ? 1 : i + 1});
  return Graph(n + 1, edges);
}

Graph example_graph_12() {
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> listed = {
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 2}, {7, 3}, {6, 4}, {5, 1}, {5, 3}, {4, 1}};
  std::vector<Edge> edges;
  for (auto [a, b] : listed) edges.push_back({a - 1, b - 1});
  return Graph(7, edges);
}

std::vector<std::string> WheelContext::ab_names() const {
  auto names = default_variable_names(n, "A", 0);
  const auto bs = default_variable_names(n, "B", 0);
  names.insert(names.end(), bs.begin(), bs.end());
  return names;
}

std::vector<std::string> WheelContext::t_names() const { return default_variable_names(2 * n, "T", 1); }

WheelContext wheel_context(std::uint32_t n) {
  check_n(n);
  WheelContext ctx;
  ctx.n = n;
  ctx.graph = wheel(n);
  const std::size_t vars = 2 * n;
  // T_k has index k-1.
  auto t = [&](std::size_t k) { return MPoly::variable(vars, k - 1); };
  auto wrap = [n](std::size_t p) { return p % n + 1; };  // successor of p in 1..n

  ctx.matrix_T = SymbolicMatrix(n, vars);
  for (std::size_t p = 1; p <= n; ++p) {
    ctx.matrix_T.at(p - 1, p - 1) = t(p) + t(wrap(p)) + t(n + p);
    const std::size_t q = wrap(p);
    ctx.matrix_T.at(p - 1, q - 1) = -t(q);
    ctx.matrix_T.at(q - 1, p - 1) = -t(q);
  }

  ctx.matrix_AB = SymbolicMatrix(n, vars);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.matrix_AB.at(i, i) = MPoly::variable(vars, ctx.b(i));
    const std::size_t j = (i + 1) % n;
    ctx.matrix_AB.at(i, j) = MPoly::variable(vars, ctx.a(i));
    ctx.matrix_AB.at(j, i) = MPoly::variable(vars, ctx.a(i));
  }

  ctx.substitution.assign(vars, MPoly(vars));
  for (std::size_t i = 0; i < n; ++i) {
    ctx.substitution[ctx.b(i)] = t(i + 1) + t(wrap(i + 1)) + t(i + 1 + n);
    ctx.substitution[ctx.a(i)] = -t(wrap(i + 1));
  }

  if (!ctx.matrix_T.is_symmetric() || !ctx.matrix_AB.is_symmetric()) {
    throw InternalError("wheel matrices are not symmetric");
  }
  if (n <= kVerifiedWheelLimit) {
    const MPoly psi_t = psi_determinant(ctx.graph);
    if (determinant(ctx.matrix_T) != psi_t) throw InternalError("T-matrix determinant differs from Psi");
    if (compose(wheel_psi(ctx), ctx.substitution) != psi_t) {
      throw InternalError("AB-matrix determinant does not pull back to Psi");
    }
  }
  return ctx;
}

MPoly wheel_psi(const WheelContext& ctx) { return determinant(ctx.matrix_AB); }

MPoly wheel_Q(const WheelContext& ctx, std::size_t p, std::size_t start) {
  if (start + p > ctx.n) {
    throw ValidationError("Q_" + std::to_string(p) + "(" + std::to_string(start) +
                          ") reaches past B_" + std::to_string(ctx.n - 1));
  }
  const std::size_t vars = 2 * ctx.n;
  SymbolicMatrix m(p, vars);
  for (std::size_t r = 0; r < p; ++r) {
    m.at(r, r) = MPoly::variable(vars, ctx.b(start + r));
    if (r + 1 < p) {
      m.at(r, r + 1) = MPoly::variable(vars, ctx.a(start + r));
      m.at(r + 1, r) = m.at(r, r + 1);
    }
  }
  return determinant(m);
}

MPoly wheel_K(const WheelContext& ctx) {
  return wheel_psi(ctx) - MPoly::variable(2 * ctx.n, ctx.b(0)) * wheel_Q(ctx, ctx.n - 1, 1);
}

WheelIdentities wheel_identities(std::uint32_t n) {
  const WheelContext ctx = wheel_context(n);
  const std::size_t vars = 2 * n;
  auto A = [&](std::size_t i) { return MPoly::variable(vars, ctx.a(i)); };
  auto B = [&](std::size_t i) { return MPoly::variable(vars, ctx.b(i)); };
  auto Q = [&](std::size_t p, std::size_t i) { return wheel_Q(ctx, p, i); };

  WheelIdentities out;
  const MPoly psi = wheel_psi(ctx);
  // wheel_context throws unless the substitution identity holds.
  out.substitution = n <= kVerifiedWheelLimit;

  const MPoly q_top = Q(n - 1, 1);
  const MPoly k = wheel_K(ctx);
  out.decomposition = psi == B(0) * q_top + k;
  out.left_recurrence = q_top == B(1) * Q(n - 2, 2) - A(1) * A(1) * Q(n - 3, 3);
  out.right_recurrence = q_top == B(n - 1) * Q(n - 2, 1) - A(n - 2) * A(n - 2) * Q(n - 3, 1);

  MPoly all_a = MPoly::constant(vars, 1);
  for (std::size_t i = 0; i < n; ++i) all_a *= A(i);
  const mpz_class corner = n % 2 == 1 ? 2 : -2;
  out.corner_form =
      k == -(A(0) * A(0) * Q(n - 2, 2)) - A(n - 1) * A(n - 1) * Q(n - 2, 1) + all_a * corner;

  MPoly inner_a = MPoly::constant(vars, 1);
  for (std::size_t i = 1; i + 1 < n; ++i) inner_a *= A(i);
  const MPoly delta = Q(n - 2, 2) * Q(n - 2, 1) - inner_a * inner_a;
  out.discriminant = delta == Q(n - 3, 2) * q_top;
  return out;
}

bool wheel_recurrence_check(std::uint32_t n) {
  const auto r = wheel_identities(n);
  return r.decomposition && r.left_recurrence && r.right_recurrence && r.corner_form;
}

bool wheel_discriminant_check(std::uint32_t n) { return wheel_identities(n).discriminant; }

}  // namespace graphpoly
