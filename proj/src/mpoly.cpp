#include "graphpoly/mpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <sstream>
#include <unordered_map>

#include "graphpoly/errors.hpp"

namespace graphpoly {
namespace {

using Accumulator = std::unordered_map<Monomial, mpz_class, MonomialHash>;

void accumulate(Accumulator& acc, const Monomial& m, const mpz_class& c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

std::vector<MPoly::Term> drain(Accumulator& acc) {
  std::vector<MPoly::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.push_back({m, std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const MPoly::Term& a, const MPoly::Term& b) { return grlex_greater(a.mono, b.mono); });
  return out;
}

using RemainderMap = std::map<Monomial, mpz_class, GrlexGreater>;

void subtract_scaled(RemainderMap& rem, const MPoly& p, const Monomial& shift, const mpz_class& c) {
  for (const auto& t : p.terms()) {
    const Monomial m = t.mono * shift;
    auto [it, inserted] = rem.try_emplace(m, 0);
    it->second -= c * t.coef;
    if (it->second == 0) rem.erase(it);
  }
}

}  // namespace

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned s = unsigned{exp[i]} + other.exp[i];
    if (s > 255) throw ValidationError("exponent overflow (> 255)");
    m.exp[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exp[i] = static_cast<std::uint8_t>(exp[i] - divisor.exp[i]);
  }
  return m;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t w[kMaxVariables / 8];
  std::memcpy(w, m.exp.data(), sizeof(w));
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : w) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

MPoly::MPoly(std::size_t variable_count) : nvars_(variable_count) {
  if (variable_count > kMaxVariables) {
    throw ValidationError("at most " + std::to_string(kMaxVariables) + " variables supported");
  }
}

MPoly MPoly::constant(std::size_t variable_count, const mpz_class& c) {
  MPoly p(variable_count);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

MPoly MPoly::variable(std::size_t variable_count, std::size_t var) {
  if (var >= variable_count) throw ValidationError("variable index out of range");
  MPoly p(variable_count);
  Monomial m;
  m.exp[var] = 1;
  p.terms_.push_back({m, 1});
  return p;
}

MPoly MPoly::from_terms(std::size_t variable_count, std::vector<Term> terms) {
  MPoly p(variable_count);
  Accumulator acc;
  for (auto& t : terms) {
    for (std::size_t i = variable_count; i < kMaxVariables; ++i) {
      if (t.mono.exp[i] != 0) throw ValidationError("term uses a variable beyond the ring");
    }
    accumulate(acc, t.mono, t.coef);
  }
  p.terms_ = drain(acc);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

int MPoly::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp.at(var));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

bool MPoly::is_multilinear() const {
  for (const auto& t : terms_) {
    for (auto e : t.mono.exp) {
      if (e > 1) return false;
    }
  }
  return true;
}

std::uint32_t MPoly::variables_used() const {
  std::uint32_t used = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono.exp[i] != 0) used |= std::uint32_t{1} << i;
    }
  }
  return used;
}

mpz_class MPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
  }
  return g;
}

MPoly MPoly::coefficient_in(std::size_t var, unsigned k) const {
  if (var >= nvars_) throw ValidationError("variable index out of range");
  MPoly out(nvars_);
  for (const auto& t : terms_) {
    if (t.mono.exp[var] != k) continue;
    Term s = t;
    s.mono.exp[var] = 0;
    out.terms_.push_back(std::move(s));
  }
  // Removing one variable's exponent can reorder terms of different degree.
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

void MPoly::check_compatible(const MPoly& o) const {
  if (nvars_ != o.nvars_) {
    throw ValidationError("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                          std::to_string(o.nvars_));
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_compatible(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].mono, o.terms_[j].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_greater(o.terms_[j].mono, terms_[i].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].coef + o.terms_[j].coef;
      if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_compatible(b);
  MPoly out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  Accumulator acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) accumulate(acc, s.mono * t.mono, s.coef * t.coef);
  }
  out.terms_ = drain(acc);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.variable_count(), 1);
  MPoly base = p;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MPoly substitute(const MPoly& p, std::size_t var, const MPoly& value) {
  if (var >= p.variable_count()) throw ValidationError("substitute: variable index out of range");
  if (value.variable_count() != p.variable_count()) {
    throw ValidationError("substitute: variable count mismatch");
  }
  const unsigned d = p.degree_in(var);
  MPoly out(p.variable_count());
  MPoly power = MPoly::constant(p.variable_count(), 1);
  for (unsigned k = 0; k <= d; ++k) {
    if (k > 0) power *= value;
    MPoly c = p.coefficient_in(var, k);
    if (!c.is_zero()) out += c * power;
  }
  return out;
}

MPoly substitute(const MPoly& p, std::size_t var, const mpz_class& value) {
  return substitute(p, var, MPoly::constant(p.variable_count(), value));
}

MPoly partial(const MPoly& p, std::size_t var) {
  if (var >= p.variable_count()) throw ValidationError("partial: variable index out of range");
  std::vector<MPoly::Term> terms;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[var] == 0) continue;
    MPoly::Term s{t.mono, t.coef * t.mono.exp[var]};
    --s.mono.exp[var];
    terms.push_back(std::move(s));
  }
  return MPoly::from_terms(p.variable_count(), std::move(terms));
}

mpz_class coefficient_of_squarefree_monomial(const MPoly& p, std::span<const std::size_t> vars) {
  Monomial target;
  for (auto v : vars) {
    if (v >= p.variable_count()) throw ValidationError("coefficient: variable index out of range");
    target.exp[v] = 1;
  }
  for (const auto& t : p.terms()) {
    if (t.mono == target) return t.coef;
  }
  return 0;
}

MPoly compose(const MPoly& p, const std::vector<MPoly>& images) {
  if (images.size() != p.variable_count()) throw ValidationError("compose: need one image per variable");
  const std::size_t n = images.empty() ? 0 : images.front().variable_count();
  for (const auto& im : images) {
    if (im.variable_count() != n) throw ValidationError("compose: images live in different rings");
  }
  // powers[v][k] = images[v]^k, built lazily.
  std::vector<std::vector<MPoly>> powers(images.size());
  auto power_of = [&](std::size_t v, unsigned k) -> const MPoly& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(MPoly::constant(n, 1));
    while (pw.size() <= k) pw.push_back(pw.back() * images[v]);
    return pw[k];
  };
  Accumulator acc;
  for (const auto& t : p.terms()) {
    MPoly prod = MPoly::constant(n, t.coef);
    for (std::size_t v = 0; v < p.variable_count() && !prod.is_zero(); ++v) {
      if (t.mono.exp[v] != 0) prod *= power_of(v, t.mono.exp[v]);
    }
    for (const auto& s : prod.terms()) accumulate(acc, s.mono, s.coef);
  }
  return MPoly::from_terms(n, drain(acc));
}

MPoly rename_variables(const MPoly& p, std::size_t new_count,
                       const std::vector<std::optional<std::size_t>>& map) {
  if (map.size() != p.variable_count()) throw ValidationError("rename_variables: map size mismatch");
  std::vector<MPoly::Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < p.variable_count(); ++v) {
      if (t.mono.exp[v] == 0) continue;
      if (!map[v] || *map[v] >= new_count) {
        throw ValidationError("rename_variables: variable " + std::to_string(v) + " has no image");
      }
      m.exp[*map[v]] = static_cast<std::uint8_t>(m.exp[*map[v]] + t.mono.exp[v]);
    }
    terms.push_back({m, t.coef});
  }
  return MPoly::from_terms(new_count, std::move(terms));
}

std::optional<MPoly> exact_divide(const MPoly& p, const MPoly& d) {
  if (d.variable_count() != p.variable_count()) throw ValidationError("exact_divide: ring mismatch");
  if (d.is_zero()) throw ValidationError("exact_divide: division by zero");
  const auto& lead = d.leading_term();
  RemainderMap rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coef);
  std::vector<MPoly::Term> quotient;
  while (!rem.empty()) {
    const auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coef.get_mpz_t())) return std::nullopt;
    MPoly::Term t{it->first.quotient(lead.mono), it->second / lead.coef};
    subtract_scaled(rem, d, t.mono, t.coef);
    quotient.push_back(std::move(t));
  }
  return MPoly::from_terms(p.variable_count(), std::move(quotient));
}

std::optional<MPoly> is_perfect_square(const MPoly& p) {
  const std::size_t n = p.variable_count();
  if (p.is_zero()) return MPoly(n);
  const auto& lead = p.leading_term();
  if (lead.coef < 0 || !mpz_perfect_square_p(lead.coef.get_mpz_t())) return std::nullopt;
  MPoly::Term root_lead;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (lead.mono.exp[v] % 2 != 0) return std::nullopt;
    root_lead.mono.exp[v] = lead.mono.exp[v] / 2;
  }
  root_lead.coef = sqrt(lead.coef);
  const mpz_class twice_lead = 2 * root_lead.coef;

  std::vector<MPoly::Term> root{root_lead};
  RemainderMap rem;
  for (const auto& t : p.terms()) rem.emplace(t.mono, t.coef);
  rem.erase(lead.mono);
  // Each step cancels the current leading remainder term against
  // 2 * lt(root) * t, then removes the new cross terms and t^2.
  while (!rem.empty()) {
    const auto it = rem.begin();
    if (!root_lead.mono.divides(it->first)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), twice_lead.get_mpz_t())) return std::nullopt;
    MPoly::Term t{it->first.quotient(root_lead.mono), it->second / twice_lead};
    if (!grlex_greater(root.back().mono, t.mono)) return std::nullopt;
    const MPoly current = MPoly::from_terms(n, root);
    subtract_scaled(rem, current, t.mono, 2 * t.coef);
    subtract_scaled(rem, MPoly::from_terms(n, {MPoly::Term{t.mono, t.coef}}), t.mono, t.coef);
    root.push_back(std::move(t));
  }
  return MPoly::from_terms(n, std::move(root));
}

std::vector<std::string> default_variable_names(std::size_t n, const std::string& prefix,
                                                std::size_t first_index) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + first_index));
  return names;
}

std::string to_string(const MPoly& p, const std::vector<std::string>& names_in) {
  const auto names = names_in.empty() ? default_variable_names(p.variable_count()) : names_in;
  if (names.size() < p.variable_count()) throw ValidationError("to_string: too few variable names");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpz_class c = t.coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < p.variable_count(); ++v) {
      const unsigned e = t.mono.exp[v];
      if (e == 0) continue;
      factors.push_back(e == 1 ? names[v] : names[v] + "^" + std::to_string(e));
    }
    if (factors.empty() || c != 1) {
      os << c.get_str();
      if (!factors.empty()) os << "*";
    }
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k > 0) os << "*";
      os << factors[k];
    }
  }
  return os.str();
}

SymbolicMatrix::SymbolicMatrix(std::size_t dim, std::size_t variable_count)
    : dim_(dim), nvars_(variable_count), entries_(dim * dim, MPoly(variable_count)) {}

bool SymbolicMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if (!(at(i, j) == at(j, i))) return false;
    }
  }
  return true;
}

SymbolicMatrix SymbolicMatrix::minor(std::span<const std::size_t> drop_rows,
                                     std::span<const std::size_t> drop_cols) const {
  auto keep = [this](std::span<const std::size_t> drop) {
    std::vector<bool> dropped(dim_, false);
    for (auto r : drop) {
      if (r >= dim_) throw ValidationError("minor: index out of range");
      if (dropped[r]) throw ValidationError("minor: repeated index");
      dropped[r] = true;
    }
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!dropped[i]) kept.push_back(i);
    }
    return kept;
  };
  const auto rows = keep(drop_rows);
  const auto cols = keep(drop_cols);
  if (rows.size() != cols.size()) throw ValidationError("minor: not square");
  SymbolicMatrix out(rows.size(), nvars_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  }
  return out;
}

namespace {

MPoly cofactor_determinant(const SymbolicMatrix& m) {
  const std::size_t d = m.dim();
  if (d > 20) throw ValidationError("cofactor expansion limited to dimension 20");
  // memo[cols] = det of rows (d - |cols|).. with the column set `cols`.
  std::unordered_map<std::uint32_t, MPoly> memo;
  auto rec = [&](auto&& self, std::uint32_t cols) -> MPoly {
    const std::size_t k = d - static_cast<std::size_t>(std::popcount(cols));
    if (cols == 0) return MPoly::constant(m.variable_count(), 1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    MPoly sum(m.variable_count());
    int sign = 1;
    for (std::size_t j = 0; j < d; ++j) {
      if (!((cols >> j) & 1u)) continue;
      const MPoly& a = m.at(k, j);
      if (!a.is_zero()) {
        MPoly sub = self(self, cols & ~(std::uint32_t{1} << j));
        if (!sub.is_zero()) {
          MPoly prod = a * sub;
          if (sign < 0) sum -= prod;
          else sum += prod;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  const std::uint32_t all = d == 32 ? 0xffffffffu : ((std::uint32_t{1} << d) - 1);
  return rec(rec, all);
}

MPoly bareiss_determinant(const SymbolicMatrix& in) {
  const std::size_t d = in.dim();
  const std::size_t n = in.variable_count();
  if (d == 0) return MPoly::constant(n, 1);
  std::vector<std::vector<MPoly>> a(d, std::vector<MPoly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = in.at(i, j);
  }
  int sign = 1;
  MPoly prev = MPoly::constant(n, 1);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < d && a[piv][k].is_zero()) ++piv;
      if (piv == d) return MPoly(n);
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw InternalError("Bareiss step left a non-exact quotient");
        a[i][j] = std::move(*q);
      }
    }
    prev = a[k][k];
  }
  MPoly det = a[d - 1][d - 1];
  return sign < 0 ? -det : det;
}

}  // namespace

MPoly determinant(const SymbolicMatrix& m, DetMethod method) {
  if (method == DetMethod::kAuto) method = m.dim() < 5 ? DetMethod::kCofactor : DetMethod::kBareiss;
  return method == DetMethod::kCofactor ? cofactor_determinant(m) : bareiss_determinant(m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModularEvaluator::ModularEvaluator(const MPoly& p, std::uint32_t q) : q_(q), nvars_(p.variable_count()) {
  if (!is_prime(q) || q >= (1u << 31)) throw ValidationError("modulus must be a prime below 2^31");
  std::vector<std::pair<Monomial, std::uint32_t>> terms;
  for (const auto& t : p.terms()) {
    const auto r = static_cast<std::uint32_t>(mpz_fdiv_ui(t.coef.get_mpz_t(), q));
    if (r != 0) terms.push_back({t.mono, r});
  }
  // Lexicographic, A_0 most significant, descending.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first.exp > b.first.exp; });
  root_ = build(terms, 0, terms.size(), 0);
}

std::uint32_t ModularEvaluator::build(std::vector<std::pair<Monomial, std::uint32_t>>& terms,
                                      std::size_t lo, std::size_t hi, std::size_t var) {
  // First variable at or after `var` that still occurs in this range.
  std::size_t v = var;
  for (; v < nvars_; ++v) {
    bool occurs = false;
    for (std::size_t i = lo; i < hi && !occurs; ++i) occurs = terms[i].first.exp[v] != 0;
    if (occurs) break;
  }
  if (v >= nvars_) {
    std::uint64_t sum = 0;
    for (std::size_t i = lo; i < hi; ++i) sum = (sum + terms[i].second) % q_;
    nodes_.push_back(Node{kLeaf, static_cast<std::uint32_t>(sum), {}});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  Node node;
  node.var = static_cast<std::uint32_t>(v);
  for (std::size_t i = lo; i < hi;) {
    std::size_t j = i;
    while (j < hi && terms[j].first.exp[v] == terms[i].first.exp[v]) ++j;
    const std::uint32_t child = build(terms, i, j, v + 1);
    node.children.push_back({terms[i].first.exp[v], child});
    i = j;
  }
  nodes_.push_back(std::move(node));
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t ModularEvaluator::eval(std::uint32_t idx, std::span<const std::uint32_t> point) const {
  const Node& node = nodes_[idx];
  if (node.var == kLeaf) return node.value;
  const std::uint64_t x = point[node.var] % q_;
  auto xpow = [&](unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r = r * x % q_;
    return r;
  };
  std::uint64_t acc = 0;
  for (std::size_t c = 0; c < node.children.size(); ++c) {
    const unsigned power = node.children[c].first;
    const unsigned next = c + 1 < node.children.size() ? node.children[c + 1].first : 0;
    acc = (acc + eval(node.children[c].second, point)) % q_;
    acc = acc * xpow(power - next) % q_;
  }
  return static_cast<std::uint32_t>(acc);
}

std::uint32_t ModularEvaluator::operator()(std::span<const std::uint32_t> point) const {
  if (point.size() != nvars_) throw ValidationError("evaluation point has the wrong length");
  if (nodes_.empty()) return 0;
  return eval(root_, point);
}

std::uint32_t eval_mod_p(const MPoly& p, std::span<const std::uint32_t> point, std::uint32_t q) {
  return ModularEvaluator(p, q)(point);
}

}  // namespace graphpoly
