#pragma once

#include <optional>

#include "conesep/cones.hpp"

namespace conesep {

/// Candidate (x*, alpha) with alpha >= 0.
struct AugPair {
  Vec xstar;
  double alpha = 0.0;
};

/// Throws InputError when alpha < 0 or x* has a non-finite entry.
AugPair make_aug_pair(Vec xstar, double alpha);

/// Memberships of a pair in K^{a+} ⊇ K^{a#} ⊇ K^{aw#} ⊇ cor K^{a+}.
///
/// In R^n with closed pieces the weak closure of B_K is B_K itself, so
/// `in_aw_sharp` always equals `in_a_sharp`; both are reported.
struct AugClassification {
  bool in_a_plus = false;
  bool in_a_sharp = false;
  bool in_aw_sharp = false;
  bool in_cor_a_plus = false;
  double mu = 0.0;  // inf over B_K of <x*, .>
};

AugClassification classify_aug_pair(const ConeUnion& K, const AugPair& p,
                                    const Tolerances& tol = {});

/// (x*, c) with c = min over B_K of x*, for x* ∈ K^#. Throws
/// PreconditionError when c <= eps_sep (0 ∈ cl S_K blocks positive pairs).
AugPair construct_positive_pair(const ConeUnion& K, const Vec& xstar,
                                const Tolerances& tol = {});

/// Some y with <y, ĝ> >= 1 on every normalized generator (an element of
/// int K^+), found by LP; empty iff 0 ∈ conv(ĝ).
std::optional<Vec> find_sharp_functional(const ConeUnion& K,
                                         const Tolerances& tol = {});

}  // namespace conesep
