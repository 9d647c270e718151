#include <random>

#include "doctest.h"
#include "graphpoly/fpoly.hpp"

using namespace graphpoly;

namespace {

FPoly random_fpoly(std::mt19937_64& rng, std::size_t n, std::uint32_t q, std::size_t terms) {
  std::vector<FPoly::Term> ts;
  for (std::size_t i = 0; i < terms; ++i) {
    FPoly::Term t{};
    for (std::size_t v = 0; v < n; ++v) t.mono.exp[v] = static_cast<std::uint8_t>(rng() % 2);
    t.coef = static_cast<std::uint32_t>(rng() % q);
    ts.push_back(t);
  }
  return FPoly::from_terms(n, q, ts);
}

}  // namespace

TEST_CASE("F_q arithmetic") {
  const std::uint32_t q = 5;
  const FPoly x = FPoly::from_terms(2, q, {{Monomial{{1, 0}}, 1}});
  const FPoly y = FPoly::from_terms(2, q, {{Monomial{{0, 1}}, 1}});
  CHECK((x + x + x + x + x).is_zero());
  CHECK((x * x * x * x * x) == x);  // x^5 = x on F_5
  CHECK((x * y - y * x).is_zero());
  CHECK(FPoly::constant(2, q, 7).terms().front().coef == 2);
  CHECK((x * FPoly::constant(2, q, 3)).monic() == x);
  CHECK((x + y).substitute(0, 4) == y + FPoly::constant(2, q, 4));
  CHECK(inverse_mod(3, 7) == 5);
  CHECK(pow_mod(3, 6, 7) == 1);
}

TEST_CASE("F_q square roots and exact division") {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {3u, 5u, 7u, 11u}) {
    for (int round = 0; round < 50; ++round) {
      const FPoly r = random_fpoly(rng, 4, q, 1 + rng() % 5);
      const FPoly s = random_fpoly(rng, 4, q, 1 + rng() % 4);
      if (r.is_zero() || s.is_zero()) continue;
      const auto root = (r * r).square_root();
      REQUIRE(root.has_value());
      CHECK((*root == r || *root == -r));
      const auto quotient = (r * s).divide_exact(s);
      REQUIRE(quotient.has_value());
      CHECK(*quotient == r);
    }
  }
  const FPoly x = FPoly::from_terms(1, 7, {{Monomial{{1}}, 1}});
  CHECK(!(x * x + FPoly::constant(1, 7, 1)).divide_exact(x).has_value());
  CHECK(!(x * x * FPoly::constant(1, 7, 3)).square_root().has_value());  // 3 is not a square mod 7
  CHECK((x * x * FPoly::constant(1, 7, 2)).square_root().has_value());   // 2 = 3^2 mod 7
  CHECK(!(x * x + x).square_root().has_value());
  CHECK(!FPoly::from_terms(1, 2, {{Monomial{{1}}, 1}}).square_root().has_value());
}
