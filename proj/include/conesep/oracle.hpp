#pragma once

#include <cstdint>

#include "conesep/augmented_dual.hpp"
#include "conesep/cones.hpp"

// Brute-force grid references for dim <= 3. Slow on purpose; used to
// cross-check the exact routines.
namespace conesep {

struct OracleConfig {
  int grid_count = 100000;  // directions on the circle / sphere
  std::uint64_t seed = 7;
  int cor_directions = 100;
};

/// Unit-norm grid points of each piece, from a direction grid of the
/// piece's span plus generators and generator-pair arcs.
PointCloud oracle_base_grid(const ConeUnion& K, const OracleConfig& cfg,
                            const Tolerances& tol = {});

/// Grid minimum of <c, .> over B_K (an upper bound on the true value).
double oracle_mu(const ConeUnion& K, const Vec& c, const OracleConfig& cfg = {},
                 const Tolerances& tol = {});

/// phi > eps_sep on every A grid direction and < -eps_sep on every -K one.
bool oracle_separation(const ConeUnion& K, const ConeUnion& A,
                       const AugPair& cert, const OracleConfig& cfg = {},
                       const Tolerances& tol = {});

/// Algebraic-interior test of (x*, alpha) in K^{a+}: for random directions
/// (y*, beta) some step from a shrinking schedule stays in K^{a+}.
bool oracle_cor_test(const ConeUnion& K, const AugPair& p,
                     const OracleConfig& cfg = {}, const Tolerances& tol = {});

}  // namespace conesep
