#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conesep/augmented_dual.hpp"
#include "conesep/cones.hpp"

namespace conesep {

/// Admissible open range (delta1, delta2) for alpha.
struct AlphaInterval {
  double delta1 = 0.0;
  double delta2 = 0.0;
};

struct SeparationCertificate {
  Vec xstar;
  double alpha = 0.0;
  double beta = 0.0;   // min of <x*, .> over cl S_A^0
  double gamma = 0.0;  // max of <x*, .> over cl S_{-K}
  double hull_distance = 0.0;
  std::optional<AlphaInterval> alpha_interval;
  AugClassification aug_class;
};

enum class ObstructionReason { HullsIntersect, ZeroInClS, TrivialCone };

std::string_view to_string(ObstructionReason r);

struct Obstruction {
  Vec witness_point;
  ObstructionReason reason = ObstructionReason::HullsIntersect;
};

struct SeparationVerdict {
  bool separated = false;
  std::optional<SeparationCertificate> certificate;
  std::optional<Obstruction> obstruction;
  double hull_distance = 0.0;
  std::vector<std::string> notes;  // e.g. "LowMargin"
};

/// Strict separation of K and A by a Bishop-Phelps cone.
///
/// Separates cl S_{-K} from cl S_A^0 = conv({0} ∪ B_A); on success
/// alpha = -(beta + gamma) / 2 with x* scaled so that gamma = -1.
SeparationVerdict strict_bp_separation(const ConeUnion& K, const ConeUnion& A,
                                       const Tolerances& tol = {});

/// delta2 = min over B_{conv K} of x*, delta1 = max(0, -min over B_A of x*)
/// raised by eps_sep. Empty unless delta2 > delta1 > 0.
std::optional<AlphaInterval> alpha_interval_of(const ConeUnion& K,
                                               const ConeUnion& A,
                                               const Vec& xstar,
                                               const Tolerances& tol = {});

/// Linear separation x*(a) >= 0 > x*(k) of A and K (K convex).
///
/// Solved directly as an LP: <x*, a_i> >= 0 on generators of A,
/// <x*, -ĝ_j> <= -1 on the normalized generators of K, minimising
/// ||x*||_1. Absent iff conv A ∩ (-K) != {0}. Throws PreconditionError
/// when 0 ∈ cl S_K.
std::optional<Vec> separate_cone_hyperplane(const ConeUnion& A,
                                            const FinGenCone& K,
                                            const Tolerances& tol = {});

struct VerificationResult {
  bool ok = false;
  double min_margin_a = 0.0;  // min of phi(a)/||a|| on the A side
  double max_margin_k = 0.0;  // max of phi(k)/||k|| on the -K side
  bool base_ok = false;       // x*(a) > -alpha > x*(k) on normalized points
  std::size_t disagreements = 0;
  std::size_t samples = 0;
};

/// Sampled check of phi > 0 on A \ {0} and phi < 0 on -K \ {0}, both with
/// margin eps_sep, together with the base-form check on the same points.
VerificationResult verify_strict_separation(const ConeUnion& K,
                                            const ConeUnion& A,
                                            const AugPair& cert,
                                            int sample_count,
                                            std::uint64_t seed,
                                            const Tolerances& tol = {});

/// As verify_strict_separation, with the A side restricted to bd A (dim <= 3).
VerificationResult verify_boundary_separation(const ConeUnion& K,
                                              const ConeUnion& A,
                                              const AugPair& cert,
                                              int sample_count,
                                              std::uint64_t seed,
                                              const Tolerances& tol = {});

struct AnalysisReport {
  bool a_meets_conv_neg_k_trivially = false;  // A ∩ cl conv(-K) = {0}
  bool zero_in_cl_s_neg_k = false;
  bool zero_in_cl_s_a = false;
  bool conv_k_pointed = false;
  bool conv_a_pointed = false;
  bool necessary_conditions = false;
  double hull_distance = 0.0;
  bool hulls_disjoint = false;
  bool a_convex = false;
  // Only for convex A: whether necessary_conditions == hulls_disjoint.
  std::optional<bool> convex_equivalence;
  // x* with x*(a) >= 0 > x*(k) against cl conv K, when one exists.
  std::optional<Vec> linear_separator;
};

AnalysisReport check_necessary_conditions(const ConeUnion& K,
                                          const ConeUnion& A,
                                          const Tolerances& tol = {});

}  // namespace conesep
