#include "graphpoly/fpoly.hpp"

#include <algorithm>
#include <unordered_map>

#include "graphpoly/errors.hpp"

namespace graphpoly {
namespace {

void reduce_exponents(Monomial& m, std::uint32_t q) {
  for (auto& e : m.exp) {
    while (e >= q) e = static_cast<std::uint8_t>(e - (q - 1));
  }
}

}  // namespace

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t q) {
  std::uint64_t r = 1 % q;
  a %= q;
  while (e > 0) {
    if (e & 1u) r = r * a % q;
    a = a * a % q;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t q) {
  if (a % q == 0) throw InternalError("inverse of zero mod q");
  return pow_mod(a, q - 2, q);
}

FPoly::FPoly(std::size_t variable_count, std::uint32_t q) : nvars_(variable_count), q_(q) {}

FPoly FPoly::from_terms(std::size_t variable_count, std::uint32_t q, std::vector<Term> terms) {
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  for (auto& t : terms) {
    reduce_exponents(t.mono, q);
    auto [it, inserted] = acc.try_emplace(t.mono, 0);
    it->second = (it->second + t.coef) % q;
  }
  FPoly out(variable_count, q);
  for (const auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, static_cast<std::uint32_t>(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  return out;
}

FPoly FPoly::from_mpoly(const MPoly& p, std::uint32_t q) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    terms.push_back({t.mono, static_cast<std::uint32_t>(mpz_fdiv_ui(t.coef.get_mpz_t(), q))});
  }
  return from_terms(p.variable_count(), q, std::move(terms));
}

FPoly FPoly::constant(std::size_t variable_count, std::uint32_t q, std::uint32_t c) {
  return from_terms(variable_count, q, {Term{Monomial{}, c % q}});
}

bool FPoly::is_nonzero_constant() const { return terms_.size() == 1 && terms_[0].mono.degree() == 0; }

std::uint32_t FPoly::variables_used() const {
  std::uint32_t used = 0;
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.mono.exp[v]) used |= std::uint32_t{1} << v;
    }
  }
  return used;
}

unsigned FPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
  return d;
}

FPoly FPoly::coefficient_in(std::size_t var, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exp[var] != k) continue;
    Term s = t;
    s.mono.exp[var] = 0;
    out.push_back(s);
  }
  return from_terms(nvars_, q_, std::move(out));
}

FPoly FPoly::monic() const {
  if (terms_.empty() || terms_.front().coef == 1) return *this;
  const std::uint64_t inv = inverse_mod(terms_.front().coef, q_);
  FPoly out = *this;
  for (auto& t : out.terms_) t.coef = static_cast<std::uint32_t>(t.coef * inv % q_);
  return out;
}

FPoly FPoly::substitute(std::size_t var, std::uint32_t value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    s.coef = static_cast<std::uint32_t>(std::uint64_t{t.coef} * pow_mod(value, t.mono.exp[var], q_) % q_);
    s.mono.exp[var] = 0;
    if (s.coef) out.push_back(s);
  }
  return from_terms(nvars_, q_, std::move(out));
}

namespace {

// Product term without exponent reduction; false when an exponent would
// reach q.
bool multiply_terms(const FPoly::Term& a, const FPoly::Term& b, std::uint32_t q, FPoly::Term& out) {
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    const unsigned e = unsigned{a.mono.exp[v]} + b.mono.exp[v];
    if (e >= q) return false;
    out.mono.exp[v] = static_cast<std::uint8_t>(e);
  }
  out.coef = static_cast<std::uint32_t>(std::uint64_t{a.coef} * b.coef % q);
  return true;
}

}  // namespace

std::optional<FPoly> FPoly::divide_exact(const FPoly& d) const {
  if (d.is_zero()) throw InternalError("division by zero polynomial");
  const Term& lead = d.terms_.front();
  const std::uint64_t inv = inverse_mod(lead.coef, q_);
  FPoly rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& top = rem.terms_.front();
    if (!lead.mono.divides(top.mono)) return std::nullopt;
    Term t{top.mono.quotient(lead.mono), static_cast<std::uint32_t>(top.coef * inv % q_)};
    std::vector<Term> sub;
    for (const auto& s : d.terms_) {
      Term prod;
      if (!multiply_terms(t, s, q_, prod)) return std::nullopt;
      prod.coef = q_ - prod.coef;
      sub.push_back(prod);
    }
    rem = rem + from_terms(nvars_, q_, std::move(sub));
    quotient.push_back(t);
  }
  return from_terms(nvars_, q_, std::move(quotient));
}

std::optional<FPoly> FPoly::square_root() const {
  if (q_ == 2 || terms_.empty()) return std::nullopt;
  const Term& lead = terms_.front();
  Term root_lead{};
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (lead.mono.exp[v] % 2) return std::nullopt;
    root_lead.mono.exp[v] = lead.mono.exp[v] / 2;
  }
  const Term& last = terms_.back();
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (last.mono.exp[v] % 2) return std::nullopt;
  }
  root_lead.coef = 0;
  for (std::uint64_t c = 1; c < q_; ++c) {
    if (c * c % q_ == lead.coef) {
      root_lead.coef = static_cast<std::uint32_t>(c);
      break;
    }
  }
  if (root_lead.coef == 0) return std::nullopt;
  // Next root term = leading term of the remainder over 2 * root_lead.
  const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(2 * root_lead.coef % q_), q_);
  std::vector<Term> root{root_lead};
  FPoly rem = *this - from_terms(nvars_, q_, {Term{lead.mono, lead.coef}});
  while (!rem.is_zero()) {
    if (root.size() > terms_.size()) return std::nullopt;
    const Term& top = rem.terms_.front();
    if (!root_lead.mono.divides(top.mono)) return std::nullopt;
    Term t{top.mono.quotient(root_lead.mono), static_cast<std::uint32_t>(top.coef * inv % q_)};
    // rem -= 2 * (sum of root) * t + t^2
    std::vector<Term> sub;
    for (const auto& r : root) {
      Term prod;
      if (!multiply_terms(r, t, q_, prod)) return std::nullopt;
      prod.coef = static_cast<std::uint32_t>((q_ - prod.coef) * std::uint64_t{2} % q_);
      sub.push_back(prod);
    }
    Term sq;
    if (!multiply_terms(t, t, q_, sq)) return std::nullopt;
    sq.coef = q_ - sq.coef;
    sub.push_back(sq);
    rem = rem + from_terms(nvars_, q_, std::move(sub));
    root.push_back(t);
  }
  return from_terms(nvars_, q_, std::move(root));
}

FPoly FPoly::operator-() const {
  FPoly out = *this;
  for (auto& t : out.terms_) t.coef = q_ - t.coef;
  return out;
}

FPoly operator+(const FPoly& a, const FPoly& b) {
  if (a.q_ != b.q_ || a.nvars_ != b.nvars_) throw InternalError("FPoly ring mismatch");
  std::vector<FPoly::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return FPoly::from_terms(a.nvars_, a.q_, std::move(terms));
}

FPoly operator*(const FPoly& a, const FPoly& b) {
  if (a.q_ != b.q_ || a.nvars_ != b.nvars_) throw InternalError("FPoly ring mismatch");
  std::vector<FPoly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Monomial m;
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        unsigned e = unsigned{s.mono.exp[v]} + t.mono.exp[v];
        while (e >= a.q_) e -= a.q_ - 1;
        m.exp[v] = static_cast<std::uint8_t>(e);
      }
      terms.push_back({m, static_cast<std::uint32_t>(std::uint64_t{s.coef} * t.coef % a.q_)});
    }
  }
  return FPoly::from_terms(a.nvars_, a.q_, std::move(terms));
}

bool operator==(const FPoly& a, const FPoly& b) {
  if (a.q_ != b.q_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

void FPoly::serialize(std::string& out) const {
  for (const auto& t : terms_) {
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (t.mono.exp[v]) {
        out.push_back(static_cast<char>('a' + v));
        out += std::to_string(t.mono.exp[v]);
      }
    }
    out.push_back(':');
    out += std::to_string(t.coef);
    out.push_back(',');
  }
  out.push_back(';');
}

}  // namespace graphpoly
