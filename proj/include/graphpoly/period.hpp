#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphpoly/graph.hpp"

namespace graphpoly {

struct ConvergenceReport {
  bool convergent = false;
  std::optional<DivergenceWitness> witness;
  std::string reason;
};

// Convergence of the parametric period, via is_primitive_divergent.
// Throws ValidationError unless E = 2 h1 and g is connected.
ConvergenceReport convergence_check(const Graph& g);

// Riemann zeta at an integer p >= 2.
double zeta(int p);

// 1/Psi^2 on the chart A_chart = 1, pulled back along
// A_i = (x_i/(1-x_i))^power from the open unit cube of dimension E - 1
// (coordinates in edge order with the chart edge skipped).
class PeriodIntegrand {
 public:
  PeriodIntegrand(const Graph& g, std::size_t chart, unsigned power = 1);

  std::size_t dimension() const { return dim_; }
  std::size_t chart() const { return chart_; }
  unsigned power() const { return power_; }
  // +infinity where Psi vanishes (faces of the cube, e.g. x = 0 when
  // h1 > 1); InternalError if Psi is negative or not finite.
  double operator()(std::span<const double> x) const;
  // Psi at chart coordinates A (A_chart = 1 already removed).
  double psi(std::span<const double> a) const;

 private:
  std::size_t dim_ = 0;
  std::size_t chart_ = 0;
  unsigned power_ = 1;
  // Each monomial as its local variables, degree <= E.
  std::vector<std::vector<std::uint8_t>> monomials_;
  std::vector<double> coefs_;
};

// Plain cube map (power 1). Default chart: the last edge.
double integrand_value(const Graph& g, std::span<const double> x, std::optional<std::size_t> chart = {});

enum class Sampler { kNet, kPrng };
std::string to_string(Sampler s);
Sampler parse_sampler(const std::string& s);

struct PeriodOptions {
  Sampler sampler = Sampler::kNet;
  std::optional<std::size_t> chart;
  unsigned threads = 1;
  std::size_t batches = 32;
  // Power k of the map A = (x/(1-x))^k; 0 picks k = h1. Subgraph faces
  // give the plain map (k = 1) infinite variance once h1 > 1. When one
  // batch carries more than 20% of the mass the run is repeated with k+1.
  unsigned map_power = 0;
};

struct PeriodEstimate {
  std::string graph_id;
  std::uint64_t sample_count = 0;
  double estimate = 0;
  double standard_error = 0;
  int zeta_order = 0;  // 2n - 3
  std::optional<double> ratio_to_zeta;  // null when 2n - 3 < 2
  std::optional<double> ratio_error;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::kNet;
  std::size_t chart = 0;
  std::size_t batches = 0;
  unsigned map_power = 1;
  bool heavy_tail_alarm = false;
  double max_batch_share = 0;  // largest batch sum / total
};

// Mean of per-batch estimates of the integral of 1/Psi^2 over the positive
// chart; standard error from the batch spread. Each batch draws from its own
// counter-derived stream, so results do not depend on opts.threads.
PeriodEstimate estimate_period(const Graph& g, std::uint64_t samples, std::uint64_t seed,
                               const PeriodOptions& opts = {}, const std::string& graph_id = {});

}  // namespace graphpoly
