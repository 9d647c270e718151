#include "graphpoly/point_count.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "graphpoly/errors.hpp"
#include "graphpoly/fpoly.hpp"
#include "graphpoly/graph_poly.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {
namespace {

void require_prime(std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 31) || !is_prime(q)) {
    throw ValidationError("not a prime below 2^31: " + std::to_string(q));
  }
}

mpz_class power(std::uint64_t q, std::size_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, k);
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration. Variables are specialized one at a time, outermost first; a
// polynomial in the remaining variables is a term list sorted so that terms
// agreeing off the current variable are adjacent.

struct DenseTerm {
  std::array<std::uint8_t, kMaxVariables> exp;  // by local variable index
  std::uint32_t coef;
};

using DensePoly = std::vector<DenseTerm>;
// Polynomials of one level; `size` of them are live, the rest keep capacity.
struct Level {
  std::vector<DensePoly> polys;
  std::size_t size = 0;
};

class Enumerator {
 public:
  Enumerator(const std::vector<FPoly>& polys, std::uint32_t q) : q_(q), wide_(q > (1u << 16)) {
    std::uint32_t used = 0;
    for (const auto& p : polys) used |= p.variables_used();
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (used >> v & 1u) vars_.push_back(v);
    }
    for (const auto& p : polys) {
      DensePoly d;
      for (const auto& t : p.terms()) {
        DenseTerm dt{{}, t.coef};
        for (std::size_t i = 0; i < vars_.size(); ++i) dt.exp[i] = t.mono.exp[vars_[i]];
        d.push_back(dt);
      }
      const std::size_t w = vars_.size();
      std::sort(d.begin(), d.end(), [w](const DenseTerm& a, const DenseTerm& b) {
        return std::lexicographical_compare(a.exp.rend() - w, a.exp.rend(), b.exp.rend() - w, b.exp.rend());
      });
      top_.polys.push_back(std::move(d));
    }
    top_.size = top_.polys.size();
    if (q_ <= 1024) {
      pow_.assign(std::size_t{q_} * q_, 0);
      for (std::uint32_t c = 0; c < q_; ++c) {
        std::uint64_t x = 1;
        for (std::uint32_t e = 0; e < q_; ++e) {
          pow_[std::size_t{c} * q_ + e] = static_cast<std::uint32_t>(x);
          x = x * c % q_;
        }
      }
    }
  }

  std::size_t width() const { return vars_.size(); }

  // Count with the first local variable fixed to c.
  std::uint64_t count_slice(std::uint32_t c) const {
    if (vars_.empty()) return all_vanish(top_) ? 1 : 0;
    std::vector<Level> scratch(vars_.size());
    if (!specialize(top_, 0, c, scratch[0])) return 0;
    return count_from(scratch[0], 1, scratch);
  }

  std::uint64_t count() const {
    if (vars_.empty()) return all_vanish(top_) ? 1 : 0;
    std::vector<Level> scratch(vars_.size());
    return count_from(top_, 0, scratch);
  }

 private:
  std::uint32_t pw(std::uint32_t c, unsigned e) const {
    return pow_.empty() ? pow_mod(c, e, q_) : pow_[std::size_t{c} * q_ + e];
  }

  static bool all_vanish(const Level& l) {
    for (std::size_t i = 0; i < l.size; ++i) {
      if (!l.polys[i].empty()) return false;
    }
    return true;
  }

  // Sets local variable `level` to c. Returns false if some polynomial
  // became a nonzero constant; zero polynomials are dropped.
  bool specialize(const Level& in, std::size_t level, std::uint32_t c, Level& out) const {
    out.size = 0;
    const std::size_t w = vars_.size();
    for (std::size_t k = 0; k < in.size; ++k) {
      const DensePoly& p = in.polys[k];
      if (out.polys.size() <= out.size) out.polys.emplace_back();
      DensePoly& r = out.polys[out.size];
      r.clear();
      for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        std::uint64_t acc = 0;
        while (j < p.size() && std::equal(p[j].exp.begin() + level + 1, p[j].exp.begin() + w,
                                          p[i].exp.begin() + level + 1)) {
          acc += std::uint64_t{p[j].coef} * pw(c, p[j].exp[level]);
          if (wide_) acc %= q_;
          ++j;
        }
        acc %= q_;
        if (acc != 0) {
          r.push_back(p[i]);
          r.back().exp[level] = 0;
          r.back().coef = static_cast<std::uint32_t>(acc);
        }
        i = j;
      }
      if (r.empty()) continue;
      if (r.size() == 1 && std::all_of(r.front().exp.begin() + level + 1, r.front().exp.begin() + w,
                                       [](std::uint8_t e) { return e == 0; })) {
        return false;
      }
      ++out.size;
    }
    return true;
  }

  std::uint64_t count_from(const Level& ps, std::size_t level, std::vector<Level>& scratch) const {
    const std::size_t remaining = vars_.size() - level;
    if (ps.size == 0) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < remaining; ++i) r *= q_;
      return r;
    }
    if (remaining == 1) {
      // A linear first polynomial pins the value down.
      const DensePoly& head = ps.polys[0];
      unsigned degree = 0;
      for (const auto& t : head) degree = std::max<unsigned>(degree, t.exp[level]);
      if (degree == 1) {
        std::uint64_t a = 0, b = 0;
        for (const auto& t : head) ((t.exp[level] ? a : b) += t.coef) %= q_;
        a %= q_;
        b %= q_;
        if (a == 0) return 0;
        const std::uint32_t root =
            static_cast<std::uint32_t>((q_ - b) % q_ * inverse_mod(static_cast<std::uint32_t>(a), q_) % q_);
        return vanish_at(ps, 1, level, root) ? 1 : 0;
      }
      std::uint64_t n = 0;
      for (std::uint32_t c = 0; c < q_; ++c) n += vanish_at(ps, 0, level, c);
      return n;
    }
    std::uint64_t n = 0;
    Level& next = scratch[level];
    for (std::uint32_t c = 0; c < q_; ++c) {
      if (specialize(ps, level, c, next)) n += count_from(next, level + 1, scratch);
    }
    return n;
  }

  bool vanish_at(const Level& ps, std::size_t from, std::size_t level, std::uint32_t c) const {
    for (std::size_t i = from; i < ps.size; ++i) {
      std::uint64_t acc = 0;
      for (const auto& t : ps.polys[i]) {
        acc += std::uint64_t{t.coef} * pw(c, t.exp[level]);
        if (wide_) acc %= q_;
      }
      if (acc % q_ != 0) return false;
    }
    return true;
  }

  std::uint32_t q_;
  bool wide_;  // products no longer fit 2^32: reduce every term
  std::vector<std::size_t> vars_;
  Level top_;
  std::vector<std::uint32_t> pow_;
};

// Count over the variables the polynomials use.
mpz_class enumerate(const std::vector<FPoly>& polys, std::uint32_t q, unsigned threads) {
  Enumerator en(polys, q);
  if (threads <= 1 || en.width() < 2) return mpz_class(std::to_string(en.count()));
  std::vector<std::uint64_t> slices(q);
  parallel_for(q, threads, [&](std::size_t c) { slices[c] = en.count_slice(static_cast<std::uint32_t>(c)); });
  mpz_class total = 0;
  for (auto s : slices) total += mpz_class(std::to_string(s));
  return total;
}

// Homogeneous nonconstant polynomials: the zero set is a cone, so
// N = 1 + (q - 1) * sum_j N(x_0 = .. = x_{j-1} = 0, x_j = 1).
mpz_class enumerate_cone(const std::vector<FPoly>& polys, std::uint32_t q, unsigned threads) {
  std::uint32_t used = 0;
  for (const auto& p : polys) used |= p.variables_used();
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (used >> v & 1u) vars.push_back(v);
  }
  mpz_class projective = 0;
  std::vector<FPoly> zeroed = polys;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    std::vector<FPoly> chart;
    bool empty = false;
    for (const auto& p : zeroed) {
      FPoly c = p.substitute(vars[j], 1);
      if (c.is_nonzero_constant()) empty = true;
      if (!c.is_zero()) chart.push_back(std::move(c));
    }
    if (!empty) {
      std::uint32_t chart_used = 0;
      for (const auto& c : chart) chart_used |= c.variables_used();
      const std::size_t free = vars.size() - 1 - j - std::popcount(chart_used);
      projective += power(q, free) * (chart.empty() ? mpz_class(1) : enumerate(chart, q, threads));
    }
    for (auto& p : zeroed) p = p.substitute(vars[j], 0);
  }
  return 1 + (q - 1) * projective;
}

std::vector<FPoly> reduce_all(const std::vector<MPoly>& polys, std::uint32_t q) {
  std::vector<FPoly> out;
  for (const auto& p : polys) out.push_back(FPoly::from_mpoly(p, q));
  return out;
}

std::size_t ring_size(const std::vector<MPoly>& polys) {
  if (polys.empty()) throw ValidationError("empty polynomial set");
  const std::size_t n = polys.front().variable_count();
  for (const auto& p : polys) {
    if (p.variable_count() != n) throw ValidationError("polynomials from different rings");
  }
  return n;
}

// ---------------------------------------------------------------------------
// Split recursion on polynomial sets.

class SplitCounter {
 public:
  SplitCounter(std::uint32_t q, const CountOptions& opts) : q_(q), opts_(opts) {}

  // Count over the variables in `vars`; every polynomial lives in them.
  mpz_class count(std::vector<FPoly> polys, std::uint32_t vars) {
    std::vector<FPoly> set;
    if (!normalize(std::move(polys), set)) return 0;
    std::uint32_t used = 0;
    for (const auto& p : set) used |= p.variables_used();
    mpz_class free = power(q_, std::popcount(vars & ~used));
    if (set.empty()) return free;
    return free * core(std::move(set), used);
  }

 private:
  // Drops zeros, scales to monic, replaces squares by their roots, sorts
  // and dedupes. False if the set
  // contains a nonzero constant.
  bool normalize(std::vector<FPoly> in, std::vector<FPoly>& out) const {
    std::vector<std::pair<std::string, FPoly>> keyed;
    for (auto& p : in) {
      if (p.is_zero()) continue;
      if (p.is_nonzero_constant()) return false;
      FPoly m = p.monic();
      while (auto root = m.square_root()) m = root->monic();
      std::string key;
      m.serialize(key);
      keyed.emplace_back(std::move(key), std::move(m));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    out.clear();
    for (auto& [k, p] : keyed) out.push_back(std::move(p));
    return true;
  }

  static std::optional<std::pair<FPoly, FPoly>> split_factor(const FPoly& p) {
    const std::uint32_t vars = p.variables_used();
    for (std::size_t x = 0; x < kMaxVariables; ++x) {
      if (!(vars >> x & 1u) || p.degree_in(x) != 1) continue;
      const FPoly a = p.coefficient_in(x, 1);
      if (a.is_nonzero_constant()) continue;
      const FPoly b = p.coefficient_in(x, 0);
      const FPoly x_poly = FPoly::from_terms(p.variable_count(), p.modulus(), {FPoly::Term{unit(x), 1}});
      if (b.is_zero()) return std::pair{a, x_poly};
      if (b.terms().size() < a.terms().size()) continue;
      if (auto c = b.divide_exact(a)) return std::pair{a, x_poly + *c};
    }
    return std::nullopt;
  }

  static Monomial unit(std::size_t x) {
    Monomial m;
    m.exp[x] = 1;
    return m;
  }

  // Normalized nonempty set counted over exactly the variables it uses.
  mpz_class core(std::vector<FPoly> set, std::uint32_t used) {
    std::string key;
    for (const auto& p : set) p.serialize(key);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    mpz_class result = solve(std::move(set), used);
    memo_.emplace(std::move(key), result);
    return result;
  }

  mpz_class solve(std::vector<FPoly> set, std::uint32_t used) {
    // Variable-disjoint components count independently.
    if (set.size() > 1) {
      std::vector<std::uint32_t> masks;
      for (const auto& p : set) masks.push_back(p.variables_used());
      std::vector<std::size_t> comp(set.size());
      std::iota(comp.begin(), comp.end(), 0);
      bool merged = true;
      std::vector<std::uint32_t> reach = masks;
      while (merged) {
        merged = false;
        for (std::size_t i = 0; i < set.size(); ++i) {
          for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (comp[i] != comp[j] && (reach[comp[i]] & reach[comp[j]])) {
              const std::size_t from = comp[j], to = comp[i];
              reach[to] |= reach[from];
              for (auto& c : comp) {
                if (c == from) c = to;
              }
              merged = true;
            }
          }
        }
      }
      if (std::any_of(comp.begin(), comp.end(), [&](std::size_t c) { return c != comp[0]; })) {
        std::vector<std::size_t> roots(comp);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        mpz_class product = 1;
        for (std::size_t r : roots) {
          std::vector<FPoly> part;
          for (std::size_t i = 0; i < set.size(); ++i) {
            if (comp[i] == r) part.push_back(set[i]);
          }
          product *= core(std::move(part), reach[r]);
          if (product == 0) break;
        }
        return product;
      }
    }

    // p = a (x + b/a) for some linear variable x: V(p) = V(a) u V(x + b/a).
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (auto factors = split_factor(set[i])) {
        std::vector<FPoly> rest;
        for (std::size_t j = 0; j < set.size(); ++j) {
          if (j != i) rest.push_back(set[j]);
        }
        auto with = [&](std::initializer_list<const FPoly*> extra) {
          std::vector<FPoly> s = rest;
          for (const FPoly* e : extra) s.push_back(*e);
          return count(std::move(s), used);
        };
        const auto& [f, g] = *factors;
        return with({&f}) + with({&g}) - with({&f, &g});
      }
    }

    const std::size_t width = std::popcount(used);
    if (power(q_, width) <= mpz_class(std::to_string(opts_.brute_width))) return enumerate(set, q_, 1);

    // Pivot: a polynomial linear in some variable x, p1 = x a1 + b1.
    std::size_t best_poly = 0, best_var = 0, best_cost = SIZE_MAX;
    for (std::size_t i = 0; i < set.size(); ++i) {
      const std::uint32_t vars = set[i].variables_used();
      for (std::size_t v = 0; v < kMaxVariables; ++v) {
        if (!(vars >> v & 1u) || set[i].degree_in(v) != 1) continue;
        const std::size_t cost = opts_.greedy ? set[i].coefficient_in(v, 1).terms().size() : 0;
        if (cost < best_cost || (cost == best_cost && v < best_var)) {
          best_cost = cost;
          best_var = v;
          best_poly = i;
        }
      }
    }
    const std::uint32_t without = used & ~(std::uint32_t{1} << best_var);

    if (best_cost == SIZE_MAX) {
      // No linear variable: sum over the values of the lowest one.
      const std::size_t x = std::countr_zero(used);
      const std::uint32_t rest = used & ~(std::uint32_t{1} << x);
      mpz_class total = 0;
      for (std::uint32_t c = 0; c < q_; ++c) {
        std::vector<FPoly> sub;
        for (const auto& p : set) sub.push_back(p.substitute(x, c));
        total += count(std::move(sub), rest);
      }
      return total;
    }

    const std::size_t x = best_var;
    const FPoly& p1 = set[best_poly];
    const FPoly a1 = p1.coefficient_in(x, 1);
    const FPoly b1 = p1.coefficient_in(x, 0);
    const std::size_t n = p1.variable_count();

    // a1 != 0: x = -b1/a1; the others are cleared of denominators.
    std::vector<FPoly> eliminated;
    std::vector<FPoly> minus_b_powers{FPoly::constant(n, q_, 1)};
    std::vector<FPoly> a_powers{FPoly::constant(n, q_, 1)};
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i == best_poly) continue;
      const unsigned d = set[i].degree_in(x);
      if (d == 0) {
        eliminated.push_back(set[i]);
        continue;
      }
      while (minus_b_powers.size() <= d) {
        minus_b_powers.push_back(minus_b_powers.back() * -b1);
        a_powers.push_back(a_powers.back() * a1);
      }
      FPoly r(n, q_);
      for (unsigned j = 0; j <= d; ++j) {
        r = r + set[i].coefficient_in(x, j) * minus_b_powers[j] * a_powers[d - j];
      }
      eliminated.push_back(std::move(r));
    }
    mpz_class total = count(eliminated, without);
    eliminated.push_back(a1);
    total -= count(std::move(eliminated), without);

    // a1 = 0: then b1 = 0 as well, and x stays free in p1.
    std::vector<FPoly> degenerate;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i != best_poly) degenerate.push_back(set[i]);
    }
    degenerate.push_back(a1);
    degenerate.push_back(b1);
    total += count(std::move(degenerate), used);
    return total;
  }

  std::uint32_t q_;
  CountOptions opts_;
  std::unordered_map<std::string, mpz_class> memo_;
};

std::uint32_t all_variables(std::size_t n) {
  return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

}  // namespace

mpz_class count_affine_brute(const std::vector<MPoly>& polys, std::uint32_t q, const CountOptions& opts) {
  require_prime(q);
  const std::size_t n = ring_size(polys);
  if (power(q, n) > mpz_class(std::to_string(opts.budget))) {
    throw BudgetError("brute force needs " + std::to_string(q) + "^" + std::to_string(n) +
                      " evaluations, budget " + std::to_string(opts.budget));
  }
  const auto reduced = reduce_all(polys, q);
  std::uint32_t used = 0;
  for (const auto& p : reduced) used |= p.variables_used();
  const bool cone = std::all_of(polys.begin(), polys.end(), [](const MPoly& p) {
    return p.is_homogeneous() && !p.is_constant();
  });
  const mpz_class core = cone ? enumerate_cone(reduced, q, opts.threads) : enumerate(reduced, q, opts.threads);
  return power(q, n - std::popcount(used)) * core;
}

mpz_class count_affine_brute(const MPoly& p, std::uint32_t q, const CountOptions& opts) {
  return count_affine_brute(std::vector<MPoly>{p}, q, opts);
}

mpz_class count_affine_split(const std::vector<MPoly>& polys, std::uint32_t q, const CountOptions& opts) {
  require_prime(q);
  const std::size_t n = ring_size(polys);
  if (q > 255) throw ValidationError("split counting supports q < 256");
  SplitCounter counter(q, opts);
  return counter.count(reduce_all(polys, q), all_variables(n));
}

mpz_class count_affine_split(const MPoly& p, std::uint32_t q, const CountOptions& opts) {
  return count_affine_split(std::vector<MPoly>{p}, q, opts);
}

mpz_class count_projective(const MPoly& p, std::uint32_t q, const CountOptions& opts, CountMethod method) {
  if (!p.is_homogeneous()) throw ValidationError("projective count needs a homogeneous polynomial");
  if (p.is_constant() && !p.is_zero()) return 0;
  const mpz_class affine =
      method == CountMethod::kBrute ? count_affine_brute(p, q, opts) : count_affine_split(p, q, opts);
  const mpz_class shifted = affine - 1;
  if (shifted % (q - 1) != 0) throw InternalError("affine count of a cone is not 1 mod q-1");
  return shifted / (q - 1);
}

mpz_class sym2_p2_count(std::uint64_t q) {
  if (q < 2) throw ValidationError("q must be at least 2");
  const mpz_class z = q;
  const mpz_class p2 = z * z + z + 1;
  const mpz_class p2_ext = z * z * z * z + z * z + 1;
  return (p2 * p2 + p2_ext) / 2;
}

mpz_class rank_stratum_count(const Graph& g, std::size_t i, std::uint32_t q, const CountOptions& opts) {
  require_prime(q);
  const DodgsonContext ctx = dodgson_form(g);
  const std::size_t h1 = ctx.loops();
  const std::size_t n = g.edge_count();
  if (n == 0 || i >= h1) return 0;
  if (n > 63) throw ValidationError("too many edges for rank strata");
  const mpz_class points = (power(q, n) - 1) / (q - 1);
  if (points > mpz_class(std::to_string(opts.budget))) {
    throw BudgetError("rank strata need " + points.get_str() + " points, budget " + std::to_string(opts.budget));
  }

  // Entry (r, c) as a list of (variable, coefficient mod q).
  struct Linear {
    std::vector<std::pair<std::size_t, std::uint32_t>> terms;
  };
  std::vector<Linear> entries(h1 * h1);
  for (std::size_t r = 0; r < h1; ++r) {
    for (std::size_t c = 0; c < h1; ++c) {
      for (const auto& t : ctx.matrix.at(r, c).terms()) {
        if (t.mono.degree() != 1) throw InternalError("matrix entry is not linear");
        std::size_t v = 0;
        while (t.mono.exp[v] == 0) ++v;
        entries[r * h1 + c].terms.push_back({v, static_cast<std::uint32_t>(mpz_fdiv_ui(t.coef.get_mpz_t(), q))});
      }
    }
  }
  const std::size_t bound = h1 - i;

  auto rank_below = [&](const std::vector<std::uint32_t>& x, std::vector<std::uint64_t>& m) {
    for (std::size_t k = 0; k < h1 * h1; ++k) {
      std::uint64_t acc = 0;
      for (auto [v, c] : entries[k].terms) acc += std::uint64_t{c} * x[v];
      m[k] = acc % q;
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < h1 && rank < h1; ++col) {
      std::size_t piv = rank;
      while (piv < h1 && m[piv * h1 + col] == 0) ++piv;
      if (piv == h1) continue;
      for (std::size_t c = 0; c < h1; ++c) std::swap(m[piv * h1 + c], m[rank * h1 + c]);
      const std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(m[rank * h1 + col]), q);
      for (std::size_t r = rank + 1; r < h1; ++r) {
        const std::uint64_t f = m[r * h1 + col] * inv % q;
        if (f == 0) continue;
        for (std::size_t c = col; c < h1; ++c) {
          m[r * h1 + c] = (m[r * h1 + c] + (q - f) * m[rank * h1 + c]) % q;
        }
      }
      ++rank;
    }
    return rank < bound;
  };

  // Normalized points: first nonzero coordinate j is 1. Tasks fix j and,
  // when there is one, the coordinate after it.
  struct Task {
    std::size_t lead;
    std::uint32_t next;
  };
  std::vector<Task> tasks;
  for (std::size_t j = 0; j < n; ++j) {
    if (j + 1 == n) {
      tasks.push_back({j, 0});
    } else {
      for (std::uint32_t c = 0; c < q; ++c) tasks.push_back({j, c});
    }
  }
  std::vector<std::uint64_t> counts(tasks.size(), 0);
  parallel_for(tasks.size(), opts.threads, [&](std::size_t t) {
    const auto [j, c0] = tasks[t];
    std::vector<std::uint32_t> x(n, 0);
    std::vector<std::uint64_t> m(h1 * h1);
    x[j] = 1;
    if (j + 1 < n) x[j + 1] = c0;
    const std::size_t first_free = j + 2;
    std::uint64_t found = 0;
    while (true) {
      found += rank_below(x, m);
      std::size_t k = n;
      bool wrapped = true;
      while (k > first_free) {
        --k;
        if (++x[k] < q) {
          wrapped = false;
          break;
        }
        x[k] = 0;
      }
      if (wrapped) break;
    }
    counts[t] = found;
  });
  mpz_class total = 0;
  for (auto c : counts) total += mpz_class(std::to_string(c));
  return total;
}

std::vector<mpq_class> interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t k = xs.size();
  if (k == 0 || ys.size() != k) throw ValidationError("interpolation needs matching nonempty point lists");
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t j = k - 1; j >= level; --j) {
      const mpq_class dx = mpq_class(xs[j]) - mpq_class(xs[j - level]);
      if (dx == 0) throw ValidationError("repeated interpolation node");
      dd[j] = (dd[j] - dd[j - 1]) / dx;
    }
  }
  std::vector<mpq_class> coefs(k, 0);
  for (std::size_t j = k; j-- > 0;) {
    // coefs = coefs * (x - xs[j]) + dd[j]
    for (std::size_t d = k - 1; d > 0; --d) coefs[d] = coefs[d - 1] - coefs[d] * xs[j];
    coefs[0] = -coefs[0] * xs[j];
    coefs[0] += dd[j];
  }
  return coefs;
}

std::string format_q_polynomial(const std::vector<mpq_class>& coefs) {
  std::string out;
  for (std::size_t d = coefs.size(); d-- > 0;) {
    mpq_class c = coefs[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!out.empty()) out += negative ? "-" : "+";
    else if (negative) out += "-";
    const bool unit = c == 1;
    if (d == 0) {
      out += c.get_str();
    } else if (!unit) {
      out += c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")";
    }
    if (d > 0) {
      out += "q";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPolynomial: return "polynomial";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kUndetermined: return "undetermined";
  }
  return "undetermined";
}

CountReport fit_point_count_polynomial(const Graph& g, const std::vector<std::uint32_t>& fit_primes,
                                       const std::vector<std::uint32_t>& validation_primes,
                                       const CountOptions& opts, const std::string& graph_id) {
  const std::size_t e = g.edge_count();
  if (e == 0) throw ValidationError("graph has no edges");
  const std::size_t needed = e >= 2 ? e - 1 : 1;
  if (fit_primes.size() < needed) {
    throw ValidationError("fit needs at least " + std::to_string(needed) + " primes, got " +
                          std::to_string(fit_primes.size()));
  }
  CountReport report;
  report.graph_id = graph_id;
  report.fit_primes = fit_primes;
  report.validation_primes = validation_primes;
  report.primes = fit_primes;
  report.primes.insert(report.primes.end(), validation_primes.begin(), validation_primes.end());
  {
    auto sorted = report.primes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("repeated prime");
    }
  }
  for (auto q : report.primes) require_prime(q);

  const MPoly psi = psi_determinant(g);
  const std::size_t k = report.primes.size();
  report.affine_counts.assign(k, 0);
  report.projective_counts.assign(k, 0);
  CountOptions inner = opts;
  inner.threads = 1;
  parallel_for(k, opts.threads, [&](std::size_t i) {
    const std::uint32_t q = report.primes[i];
    report.affine_counts[i] = psi.is_constant() ? mpz_class(0) : count_affine_split(psi, q, inner);
    report.projective_counts[i] = count_projective(psi, q, inner);
  });

  assess_fit(report, e >= 2 ? e - 2 : 0);
  return report;
}

void assess_fit(CountReport& report, std::size_t dimension) {
  const auto& fit_primes = report.fit_primes;
  const std::size_t k = report.primes.size();
  if (report.projective_counts.size() != k || fit_primes.empty()) {
    throw ValidationError("count report is inconsistent");
  }
  std::vector<mpz_class> xs, ys;
  for (std::size_t i = 0; i < fit_primes.size(); ++i) {
    xs.push_back(fit_primes[i]);
    ys.push_back(report.projective_counts[i]);
  }
  report.interpolated = interpolate(xs, ys);
  std::vector<mpz_class> fitted;
  bool integral = true;
  for (const auto& c : report.interpolated) {
    if (c.get_den() != 1) integral = false;
    fitted.push_back(c.get_num());
  }
  while (!fitted.empty() && fitted.back() == 0) fitted.pop_back();
  if (!integral) {
    report.verdict = Verdict::kMismatch;
    report.note = "interpolated coefficients are not integers";
    return;
  }
  if (fitted.size() > dimension + 1) {
    report.verdict = Verdict::kMismatch;
    report.note = "interpolated degree exceeds dim X = " + std::to_string(dimension);
    return;
  }
  report.fitted = fitted;
  for (std::size_t i = fit_primes.size(); i < k; ++i) {
    mpz_class value = 0;
    for (std::size_t d = fitted.size(); d-- > 0;) value = value * report.primes[i] + fitted[d];
    if (value != report.projective_counts[i]) {
      report.verdict = Verdict::kMismatch;
      report.failing_prime = report.primes[i];
      report.note = "count at q=" + std::to_string(report.primes[i]) + " is " +
                    report.projective_counts[i].get_str() + ", fit predicts " + value.get_str();
      return;
    }
  }
  if (report.validation_primes.empty()) {
    report.verdict = Verdict::kUndetermined;
    report.note = "no validation primes";
  } else {
    report.verdict = Verdict::kPolynomial;
  }
}

StratificationTrace stratification_trace(const Graph& g) {
  const std::size_t h1 = loop_rank(g);
  if (g.edge_count() != 2 * h1 || h1 < 3) {
    throw ValidationError("stratification trace needs 2n edges and n >= 3 loops");
  }
  const DodgsonContext ctx = dodgson_form(g);
  StratificationTrace tr;
  tr.loops = h1;
  tr.order = ctx.order;
  const bool use_graph_matrix = h1 < 4;
  tr.minor_source = use_graph_matrix ? "graph_matrix" : "matrix";
  auto minor = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    return use_graph_matrix ? graph_dodgson(ctx, rows, cols) : dodgson(ctx, rows, cols);
  };

  const MPoly psi = minor({}, {});
  const MPoly d1 = partial(psi, 0), d2 = partial(psi, 1);
  const MPoly lhs = substitute(d1, 1, mpz_class(0)) * substitute(d2, 0, mpz_class(0)) -
                    partial(d1, 1) * substitute(substitute(psi, 0, mpz_class(0)), 1, mpz_class(0));
  tr.psi_12 = minor({0}, {1});
  tr.square_identity = lhs == tr.psi_12 * tr.psi_12;
  if (auto root = is_perfect_square(lhs)) tr.square_root_found = *root == tr.psi_12 || *root == -tr.psi_12;

  const DodgsonIdentity product = dodgson_identity_holds(ctx, {0}, {1}, 2, 3, use_graph_matrix);
  tr.product_identity = product.holds;
  tr.product_sign = product.sign;

  tr.f = minor({0, 2}, {1, 3});
  tr.g = minor({0, 3}, {1, 2});
  const mpz_class zero = 0;
  tr.eliminant = partial(tr.f, 4) * substitute(tr.g, 4, zero) - substitute(tr.f, 4, zero) * partial(tr.g, 4);
  tr.eliminant_degree = tr.eliminant.degree_in(5);
  if (tr.eliminant_degree <= 1) {
    tr.splits = true;
  } else if (tr.eliminant_degree == 2) {
    const MPoly a = tr.eliminant.coefficient_in(5, 2);
    const MPoly b = tr.eliminant.coefficient_in(5, 1);
    const MPoly c = tr.eliminant.coefficient_in(5, 0);
    tr.discriminant = b * b - a * c * mpz_class(4);
    tr.discriminant_square = is_perfect_square(*tr.discriminant).has_value();
    tr.splits = tr.discriminant_square;
  }
  return tr;
}

}  // namespace graphpoly
