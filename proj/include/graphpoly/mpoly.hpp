#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace graphpoly {

inline constexpr std::size_t kMaxVariables = 32;

// Exponent vector, one byte per variable.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  unsigned degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Graded lexicographic order with A_0 > A_1 > ...
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// Sparse multivariate polynomial over Z. Terms are kept in descending grlex
// order with no zero coefficients, so equal polynomials compare equal.
class MPoly {
 public:
  struct Term {
    Monomial mono;
    mpz_class coef;
  };

  MPoly() = default;
  explicit MPoly(std::size_t variable_count);

  static MPoly constant(std::size_t variable_count, const mpz_class& c);
  static MPoly variable(std::size_t variable_count, std::size_t var);
  // Combines like terms and drops zeros.
  static MPoly from_terms(std::size_t variable_count, std::vector<Term> terms);

  std::size_t variable_count() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }

  int total_degree() const;  // -1 for zero
  unsigned degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  bool is_multilinear() const;
  std::uint32_t variables_used() const;  // bit v set iff A_v occurs
  mpz_class content() const;             // gcd of coefficients, 0 for zero

  // Sum of the terms with A_var^k, with A_var removed.
  MPoly coefficient_in(std::size_t var, unsigned k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const mpz_class& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);

 private:
  void check_compatible(const MPoly& o) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

MPoly pow(const MPoly& p, unsigned k);

// p with A_var := value.
MPoly substitute(const MPoly& p, std::size_t var, const MPoly& value);
MPoly substitute(const MPoly& p, std::size_t var, const mpz_class& value);

MPoly partial(const MPoly& p, std::size_t var);

// Coefficient of prod_{v in vars} A_v (each to the first power).
mpz_class coefficient_of_squarefree_monomial(const MPoly& p, std::span<const std::size_t> vars);

// p(images[0], images[1], ...); every image has the same variable count,
// which becomes the result's.
MPoly compose(const MPoly& p, const std::vector<MPoly>& images);

// Moves A_i to A_{map[i]} in a ring with new_count variables. Variables
// mapped to nullopt must not occur.
MPoly rename_variables(const MPoly& p, std::size_t new_count,
                       const std::vector<std::optional<std::size_t>>& map);

// Quotient when d divides p exactly in Z[A], otherwise nullopt.
std::optional<MPoly> exact_divide(const MPoly& p, const MPoly& d);

// r with r^2 = p and positive leading coefficient, when one exists.
std::optional<MPoly> is_perfect_square(const MPoly& p);

// Names default to A1..An.
std::string to_string(const MPoly& p, const std::vector<std::string>& names = {});

std::vector<std::string> default_variable_names(std::size_t n, const std::string& prefix = "A",
                                                std::size_t first_index = 1);

class SymbolicMatrix {
 public:
  SymbolicMatrix() = default;
  SymbolicMatrix(std::size_t dim, std::size_t variable_count);

  std::size_t dim() const { return dim_; }
  std::size_t variable_count() const { return nvars_; }
  MPoly& at(std::size_t i, std::size_t j) { return entries_.at(i * dim_ + j); }
  const MPoly& at(std::size_t i, std::size_t j) const { return entries_.at(i * dim_ + j); }

  bool is_symmetric() const;
  // Drops the listed rows and columns, keeping the rest in order.
  SymbolicMatrix minor(std::span<const std::size_t> drop_rows,
                       std::span<const std::size_t> drop_cols) const;

 private:
  std::size_t dim_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MPoly> entries_;
};

enum class DetMethod { kAuto, kCofactor, kBareiss };

// kAuto: cofactor expansion below dimension 5, fraction-free elimination
// from 5 up. The 0x0 determinant is 1.
MPoly determinant(const SymbolicMatrix& m, DetMethod method = DetMethod::kAuto);

bool is_prime(std::uint64_t n);

// Evaluates one polynomial over F_q by nested Horner schemes, one variable
// per level. Coefficients are reduced once at construction.
class ModularEvaluator {
 public:
  ModularEvaluator(const MPoly& p, std::uint32_t q);

  std::uint32_t modulus() const { return q_; }
  std::size_t variable_count() const { return nvars_; }
  std::uint32_t operator()(std::span<const std::uint32_t> point) const;

 private:
  struct Node {
    std::uint32_t var = 0;     // kLeaf for constants
    std::uint32_t value = 0;   // leaf value
    std::vector<std::pair<unsigned, std::uint32_t>> children;  // (power, node), descending power
  };
  static constexpr std::uint32_t kLeaf = 0xffffffffu;

  std::uint32_t build(std::vector<std::pair<Monomial, std::uint32_t>>& terms, std::size_t lo,
                      std::size_t hi, std::size_t var);
  std::uint32_t eval(std::uint32_t node, std::span<const std::uint32_t> point) const;

  std::uint32_t q_;
  std::size_t nvars_;
  std::vector<Node> nodes_;
  std::uint32_t root_ = 0;
};

std::uint32_t eval_mod_p(const MPoly& p, std::span<const std::uint32_t> point, std::uint32_t q);

}  // namespace graphpoly
