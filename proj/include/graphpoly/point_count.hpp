#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

struct CountOptions {
  std::uint64_t budget = 1'000'000'000;  // point evaluations per brute-force call
  unsigned threads = 1;
  // Split recursion hands a polynomial set to brute force once q^k is at
  // most this many points.
  std::uint64_t brute_width = 20000;
  // Elimination variable: fewest-term linear coefficient (true) or the
  // lowest-index variable occurring linearly (false).
  bool greedy = true;
};

// #{x in F_q^N : p(x) = 0} (all polynomials vanish, for a set) by enumeration.
mpz_class count_affine_brute(const MPoly& p, std::uint32_t q, const CountOptions& opts = {});
mpz_class count_affine_brute(const std::vector<MPoly>& polys, std::uint32_t q,
                             const CountOptions& opts = {});

// Same counts through the linear-variable split recursion.
mpz_class count_affine_split(const MPoly& p, std::uint32_t q, const CountOptions& opts = {});
mpz_class count_affine_split(const std::vector<MPoly>& polys, std::uint32_t q,
                             const CountOptions& opts = {});

enum class CountMethod { kBrute, kSplit };

// Points of V(p) in P^{N-1}(F_q) for homogeneous p.
mpz_class count_projective(const MPoly& p, std::uint32_t q, const CountOptions& opts = {},
                           CountMethod method = CountMethod::kSplit);

// #Sym^2 P^2(F_q) from the orbit formula (#P^2(F_q)^2 + #P^2(F_{q^2})) / 2.
mpz_class sym2_p2_count(std::uint64_t q);

// Projective points where sum_e A_e N_e (the dodgson_form matrix of g)
// has rank < h1 - i over F_q.
mpz_class rank_stratum_count(const Graph& g, std::size_t i, std::uint32_t q,
                             const CountOptions& opts = {});

// Exact interpolation: coefficients c_0..c_{k-1} of the unique polynomial of
// degree < k through the k points (x_j, y_j).
std::vector<mpq_class> interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys);

// "q^4+q^3+2q^2+q+1"; non-integer coefficients print as (a/b)q.
std::string format_q_polynomial(const std::vector<mpq_class>& coefs);

enum class Verdict { kPolynomial, kMismatch, kUndetermined };
std::string to_string(Verdict v);

struct CountReport {
  std::string graph_id;
  std::vector<std::uint32_t> fit_primes;
  std::vector<std::uint32_t> validation_primes;
  // Fit primes first, then validation primes.
  std::vector<std::uint32_t> primes;
  std::vector<mpz_class> affine_counts;
  std::vector<mpz_class> projective_counts;
  // Low degree first, trailing zeros removed. Empty when interpolation gave
  // non-integer coefficients or too high a degree.
  std::optional<std::vector<mpz_class>> fitted;
  std::vector<mpq_class> interpolated;
  Verdict verdict = Verdict::kUndetermined;
  std::optional<std::uint32_t> failing_prime;
  std::string note;
};

// Interpolates report.projective_counts at report.fit_primes and sets
// fitted, verdict, failing_prime and note. Fits of degree above
// `dimension` are mismatches.
void assess_fit(CountReport& report, std::size_t dimension);

// Fits the projective counts of X_g at fit_primes (at least E - 1 of them)
// and checks the result at validation_primes.
CountReport fit_point_count_polynomial(const Graph& g, const std::vector<std::uint32_t>& fit_primes,
                                       const std::vector<std::uint32_t>& validation_primes,
                                       const CountOptions& opts = {}, const std::string& graph_id = {});

struct StratificationTrace {
  std::size_t loops = 0;
  std::vector<std::size_t> order;  // variable k = edge order[k]
  // "matrix" (dodgson_form minors) or "graph_matrix" (bordered graph matrix)
  std::string minor_source;
  MPoly psi_12;         // Psi(1,2)
  bool square_identity = false;   // Psi^1_2 Psi^2_1 - Psi^12 Psi_12 = Psi(1,2)^2
  bool square_root_found = false; // is_perfect_square recovers +-Psi(1,2)
  bool product_identity = false;  // second Dodgson identity on Psi(1,2)
  int product_sign = 0;
  MPoly f;  // Psi({1,3},{2,4})
  MPoly g;  // Psi({1,4},{2,3})
  MPoly eliminant;  // f^5 g_5 - f_5 g^5
  unsigned eliminant_degree = 0;  // in A6
  std::optional<MPoly> discriminant;  // when eliminant_degree == 2
  bool discriminant_square = false;
  bool splits = false;
};

// Steps of the stratification argument on a graph with 2n edges and n
// loops, n >= 3, using the forward-Kruskal dodgson_form ordering. Indices in
// the field names are 1-based.
StratificationTrace stratification_trace(const Graph& g);

}  // namespace graphpoly
