#include "graphpoly/period.hpp"

#include <boost/random/sobol.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "graphpoly/errors.hpp"
#include "graphpoly/graph_poly.hpp"
#include "graphpoly/parallel.hpp"

namespace graphpoly {
namespace {

struct NeumaierSum {
  double sum = 0;
  double carry = 0;

  void add(double v) {
    const double t = sum + v;
    carry += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Midpoint of the 2^-53 cell holding the top bits of v: strictly in (0,1).
double to_unit(std::uint64_t v) { return (static_cast<double>(v >> 11) + 0.5) * 0x1.0p-53; }

struct BatchResult {
  double sum = 0;
  std::uint64_t count = 0;
};

BatchResult run_batch(const PeriodIntegrand& f, std::uint64_t n, std::uint64_t seed, std::size_t batch,
                      Sampler sampler) {
  const std::size_t d = f.dimension();
  const std::uint64_t stream = splitmix64(seed ^ splitmix64(batch + 1));
  std::vector<double> x(d);
  NeumaierSum acc;
  auto accumulate = [&] {
    const double v = f(x);
    if (!(v > 0) || !std::isfinite(v)) throw InternalError("integrand not finite and positive at a sample");
    acc.add(v);
  };
  if (d == 0) {
    for (std::uint64_t k = 0; k < n; ++k) acc.add(f(x));
    return {acc.value(), n};
  }
  if (sampler == Sampler::kNet) {
    // Random digital shift of the Sobol points, one shift per batch.
    std::vector<std::uint64_t> shift(d);
    std::uint64_t s = stream;
    for (auto& v : shift) v = s = splitmix64(s);
    boost::random::sobol net(d);
    for (std::uint64_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < d; ++i) x[i] = to_unit(net() ^ shift[i]);
      accumulate();
    }
  } else {
    std::mt19937_64 rng(stream);
    for (std::uint64_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < d; ++i) x[i] = to_unit(rng());
      accumulate();
    }
  }
  return {acc.value(), n};
}

}  // namespace

ConvergenceReport convergence_check(const Graph& g) {
  if (!is_connected(g)) throw ValidationError("graph is not connected");
  if (g.edge_count() != 2 * loop_rank(g)) throw ValidationError("not logarithmically divergent: E != 2 h1");
  const DivergenceResult r = is_primitive_divergent(g);
  return {r.primitive, r.witness, r.reason};
}

double zeta(int p) {
  if (p < 2) throw ValidationError("zeta needs p >= 2");
  if (p > 200) return 1.0;
  // Euler-Maclaurin: sum_{k<N} k^-p + N^{1-p}/(p-1) + N^-p/2 + Bernoulli tail.
  const int n = 12;
  long double s = 0;
  for (int k = n - 1; k >= 1; --k) s += std::pow(static_cast<long double>(k), -p);
  const long double nn = n;
  s += std::pow(nn, 1 - p) / (p - 1) + std::pow(nn, -p) / 2;
  static const long double bernoulli[] = {1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730,
                                          7.0L / 6};
  long double rising = p;  // p (p+1) ... (p + 2j - 2)
  long double factorial = 2;
  for (int j = 1; j <= 7; ++j) {
    s += bernoulli[j - 1] / factorial * rising * std::pow(nn, -p - 2 * j + 1);
    rising *= static_cast<long double>(p + 2 * j - 1) * (p + 2 * j);
    factorial *= static_cast<long double>(2 * j + 1) * (2 * j + 2);
  }
  return static_cast<double>(s);
}

PeriodIntegrand::PeriodIntegrand(const Graph& g, std::size_t chart, unsigned power)
    : chart_(chart), power_(power) {
  const std::size_t e = g.edge_count();
  if (e == 0 || chart >= e) throw ValidationError("chart edge out of range");
  if (power == 0 || power > 16) throw ValidationError("map power must be in 1..16");
  if (e > 255) throw ValidationError("too many edges");
  dim_ = e - 1;
  const MPoly psi = psi_determinant(g);
  for (const auto& t : psi.terms()) {
    std::vector<std::uint8_t> vars;
    for (std::size_t v = 0; v < e; ++v) {
      if (v == chart) continue;
      const std::uint8_t local = static_cast<std::uint8_t>(v < chart ? v : v - 1);
      for (unsigned k = 0; k < t.mono.exp[v]; ++k) vars.push_back(local);
    }
    monomials_.push_back(std::move(vars));
    coefs_.push_back(t.coef.get_d());
  }
}

double PeriodIntegrand::psi(std::span<const double> a) const {
  NeumaierSum s;
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    double v = coefs_[m];
    for (std::uint8_t i : monomials_[m]) v *= a[i];
    s.add(v);
  }
  return s.value();
}

double PeriodIntegrand::operator()(std::span<const double> x) const {
  if (x.size() != dim_) throw ValidationError("integrand point has the wrong dimension");
  double a_buf[256];
  double jacobian = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    const double r = 1 - x[i];
    const double b = x[i] / r;
    if (power_ == 1) {
      a_buf[i] = b;
      jacobian /= r * r;
    } else {
      const double bk1 = std::pow(b, static_cast<double>(power_ - 1));
      a_buf[i] = bk1 * b;
      jacobian *= power_ * bk1 / (r * r);
    }
  }
  const double p = psi(std::span<const double>(a_buf, dim_));
  if (p == 0) return std::numeric_limits<double>::infinity();  // pole on a face of the cube
  if (!(p > 0) || !std::isfinite(p)) throw InternalError("graph polynomial not positive on the chart");
  return jacobian / (p * p);
}

double integrand_value(const Graph& g, std::span<const double> x, std::optional<std::size_t> chart) {
  const PeriodIntegrand f(g, chart.value_or(g.edge_count() == 0 ? 0 : g.edge_count() - 1));
  return f(x);
}

std::string to_string(Sampler s) { return s == Sampler::kNet ? "net" : "prng"; }

Sampler parse_sampler(const std::string& s) {
  if (s == "net") return Sampler::kNet;
  if (s == "prng") return Sampler::kPrng;
  throw ValidationError("unknown sampler: " + s);
}

PeriodEstimate estimate_period(const Graph& g, std::uint64_t samples, std::uint64_t seed, const PeriodOptions& opts,
                               const std::string& graph_id) {
  if (samples < 10000) throw ValidationError("period estimate needs at least 10000 samples");
  if (opts.batches < 32) throw ValidationError("period estimate needs at least 32 batches");
  if (samples < opts.batches) throw ValidationError("fewer samples than batches");
  const ConvergenceReport conv = convergence_check(g);
  if (!conv.convergent) throw ValidationError("divergent graph: " + conv.reason);

  PeriodEstimate out;
  out.graph_id = graph_id;
  out.sample_count = samples;
  out.seed = seed;
  out.sampler = opts.sampler;
  out.chart = opts.chart.value_or(g.edge_count() - 1);
  out.batches = opts.batches;
  out.zeta_order = static_cast<int>(g.edge_count()) - 3;
  const unsigned loops = static_cast<unsigned>(loop_rank(g));

  auto run = [&](unsigned power) {
    const PeriodIntegrand f(g, out.chart, power);
    std::vector<BatchResult> results(opts.batches);
    parallel_for(opts.batches, opts.threads, [&](std::size_t b) {
      const std::uint64_t n = samples / opts.batches + (b < samples % opts.batches ? 1 : 0);
      results[b] = run_batch(f, n, seed, b, opts.sampler);
    });
    return results;
  };
  auto max_share = [](const std::vector<BatchResult>& rs) {
    NeumaierSum total;
    double top = 0;
    for (const auto& r : rs) {
      total.add(r.sum);
      top = std::max(top, r.sum);
    }
    return top / total.value();
  };

  out.map_power = opts.map_power != 0 ? opts.map_power : std::max(1u, loops);
  std::vector<BatchResult> results = run(out.map_power);
  out.max_batch_share = max_share(results);
  if (out.max_batch_share > 0.2) {
    out.heavy_tail_alarm = true;
    ++out.map_power;
    results = run(out.map_power);
    out.max_batch_share = max_share(results);
  }

  NeumaierSum mean_acc;
  std::vector<double> means;
  for (const auto& r : results) {
    means.push_back(r.sum / static_cast<double>(r.count));
    mean_acc.add(means.back());
  }
  const double b = static_cast<double>(means.size());
  out.estimate = mean_acc.value() / b;
  NeumaierSum var_acc;
  for (double m : means) var_acc.add((m - out.estimate) * (m - out.estimate));
  out.standard_error = std::sqrt(var_acc.value() / (b - 1) / b);
  if (out.zeta_order >= 2) {
    const double z = zeta(out.zeta_order);
    out.ratio_to_zeta = out.estimate / z;
    out.ratio_error = out.standard_error / z;
  }
  return out;
}

}  // namespace graphpoly
