#pragma once

#include <cstdint>

#include "conesep/cones.hpp"

namespace conesep {

/// Maximum number of generators per piece accepted by the exact paths.
inline constexpr int kExactGeneratorCap = 12;

/// Extreme value of a linear functional over the norm-base B_K = K ∩ S.
struct BaseQueryResult {
  double value = 0.0;
  Vec argpoint;       // unit-norm point of K attaining `value`
  bool exact = true;  // false when produced by sampling
};

/// min over B_K of <c, x>; for unions, the minimum over pieces.
///
/// l2: exact face enumeration (the minimiser on the sphere slice of each
/// face span is minus the normalized projection of c; it counts only when
/// it lies in the cone). l1 / linf: the sphere decomposes into finitely many
/// regions on which the norm is linear, so each region gives one LP and the
/// optimum sits at a unit-norm vertex of K ∩ B.
BaseQueryResult mu_base(const ConeUnion& K, const Vec& c,
                        const Tolerances& tol = {});

/// max over B_K of <c, x>, i.e. the support function of S_K = conv(B_K).
BaseQueryResult sigma_base(const ConeUnion& K, const Vec& c,
                           const Tolerances& tol = {});

/// 0 ∈ cl S_K, decided as 0 ∈ conv(normalized generators).
///
/// Any x ∈ B_K is a nonnegative combination of normalized generators whose
/// weights sum to at least ||x|| = 1 (triangle inequality), so
/// 0 ∈ conv(B_K) iff 0 ∈ conv(ĝ_i). S_K is compact here, so cl S_K = S_K.
bool zero_in_cl_S(const ConeUnion& K, const Tolerances& tol = {});

/// Deterministic points of B_K: all normalized generators first, then
/// Dirichlet-weighted combinations of a random subset (size >= 2) of a
/// piece's generators, rescaled to unit norm. Pieces are visited
/// round-robin. Not uniform on the base.
PointCloud sample_base(const ConeUnion& K, int count, std::uint64_t seed);

/// Points of B_{bd A} for dim <= 3: base points of piece facets that are not
/// interior to the union. Returns `count` points (cycling) or none if the
/// union has empty boundary.
PointCloud boundary_base_sample(const ConeUnion& A, int count,
                                std::uint64_t seed, const Tolerances& tol = {});

}  // namespace conesep
