#pragma once

// Independent ground truth for tests: exhaustive Kronecker factorization and
// a floating-point root finder. Nothing here feeds a criterion decision.

#include "irrcert/poly.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace irrcert {

enum class OracleStatus { irreducible, reducible, inconclusive };

struct OracleBudget {
  /// Counts partial and complete divisor tuples visited for one factor degree.
  std::uint64_t max_tuples_per_degree = 1'000'000;
};

struct OracleVerdict {
  OracleStatus status = OracleStatus::inconclusive;
  Polynomial g;  // reducible: g * h == f, both of degree >= 1
  Polynomial h;
  std::uint64_t tuples_tried = 0;
  std::uint64_t divisions_tried = 0;
};

/// Kronecker's method: for each factor degree t <= m/2, interpolate every
/// signed divisor tuple of f at t+1 integer points and test exact division.
/// Throws std::invalid_argument unless f is primitive of degree >= 2.
OracleVerdict kronecker_factor(const Polynomial& f, const OracleBudget& budget = {});

/// Durand-Kerner iteration until |f(z)| / sum |a_i||z|^i < 1e-10 for every
/// root, at most 1000 sweeps; one retry from a rotated start. Throws
/// std::runtime_error on non-convergence, std::invalid_argument on degree < 1.
std::vector<std::complex<double>> float_roots(const Polynomial& f);

}  // namespace irrcert
