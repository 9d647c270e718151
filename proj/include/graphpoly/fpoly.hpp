#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphpoly/mpoly.hpp"

namespace graphpoly {

// Polynomial over F_q for a prime q < 2^31, read as a function on F_q points:
// exponents are reduced with x^q = x. Terms in descending grlex order.
class FPoly {
 public:
  struct Term {
    Monomial mono;
    std::uint32_t coef;
  };

  FPoly() = default;
  FPoly(std::size_t variable_count, std::uint32_t q);

  static FPoly from_mpoly(const MPoly& p, std::uint32_t q);
  static FPoly constant(std::size_t variable_count, std::uint32_t q, std::uint32_t c);
  static FPoly from_terms(std::size_t variable_count, std::uint32_t q, std::vector<Term> terms);

  std::size_t variable_count() const { return nvars_; }
  std::uint32_t modulus() const { return q_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_nonzero_constant() const;
  std::uint32_t variables_used() const;
  unsigned degree_in(std::size_t var) const;
  // Terms with var^k, var removed.
  FPoly coefficient_in(std::size_t var, unsigned k) const;
  // Scales so the leading coefficient is 1.
  FPoly monic() const;
  FPoly substitute(std::size_t var, std::uint32_t value) const;
  // r with r^2 = p, for odd q; nullopt when none is found.
  std::optional<FPoly> square_root() const;
  // Quotient when d divides p as polynomials (no exponent wrap-around).
  std::optional<FPoly> divide_exact(const FPoly& d) const;

  FPoly operator-() const;
  friend FPoly operator+(const FPoly& a, const FPoly& b);
  friend FPoly operator-(const FPoly& a, const FPoly& b) { return a + (-b); }
  friend FPoly operator*(const FPoly& a, const FPoly& b);
  friend bool operator==(const FPoly& a, const FPoly& b);

  void serialize(std::string& out) const;

 private:
  std::size_t nvars_ = 0;
  std::uint32_t q_ = 2;
  std::vector<Term> terms_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q);
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t q);

}  // namespace graphpoly
