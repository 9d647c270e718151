#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "graphpoly/graph.hpp"
#include "graphpoly/mpoly.hpp"

namespace graphpoly {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Subspace V of K^E given by the rows of a full-rank d x E basis matrix.
class Configuration {
 public:
  // Throws ValidationError on ragged rows or rank deficiency.
  Configuration(std::size_t edge_count, RationalMatrix basis);

  std::size_t edge_count() const { return edges_; }
  std::size_t dim() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

 private:
  std::size_t edges_;
  RationalMatrix basis_;
};

std::size_t rank(const RationalMatrix& m);

// H_1 of g in edge coordinates, from the cycle basis of first_spanning_forest.
Configuration graph_configuration(const Graph& g);

// Psi_V = scale * poly with poly integral; scale is 1 / (product of the row
// denominators)^2.
struct ConfigPolynomial {
  MPoly poly;
  mpq_class scale;
};

ConfigPolynomial configuration_polynomial(const Configuration& c);

// Each d-subset coefficient equals the square of the matching d x d minor,
// and no other monomials occur.
bool pluecker_coefficient_check(const Configuration& c);

// Orthogonal complement of the row space. For d = E the result has
// dimension 0 and Psi = 1.
Configuration dual_configuration(const Configuration& c);

bool same_row_space(const Configuration& a, const Configuration& b);

// (prod_e A_e) * p(1/A) for multilinear p: complements each support.
MPoly support_reversal(const MPoly& p);

struct FunctionalEquation {
  bool holds = false;
  mpq_class lambda;  // Psi_V * lambda = (prod A) Psi_{W dual}(1/A)
};

FunctionalEquation functional_equation_check(const Configuration& c);

}  // namespace graphpoly
