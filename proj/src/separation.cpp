#include "conesep/separation.hpp"

#include "conesep/base_oracle.hpp"
#include "conesep/error.hpp"
#include "conesep/hull_distance.hpp"
#include "conesep/lp.hpp"

namespace conesep {

std::string_view to_string(ObstructionReason r) {
  switch (r) {
    case ObstructionReason::HullsIntersect:
      return "HullsIntersect";
    case ObstructionReason::ZeroInClS:
      return "ZeroInClS";
    case ObstructionReason::TrivialCone:
      return "TrivialCone";
  }
  return "?";
}

namespace {

void same_space(const ConeUnion& K, const ConeUnion& A) {
  if (!(K.norm() == A.norm())) throw InputError("K and A live in different spaces");
}

// cl S_{-K} against cl S_A^0.
BodySeparation hull_gap(const ConeUnion& neg_k, const ConeUnion& A,
                        const Tolerances& tol) {
  ConvexBody P{[&](const Vec& d) { return sigma_base(neg_k, d, tol).argpoint; }, false};
  ConvexBody Q{[&](const Vec& d) { return sigma_base(A, d, tol).argpoint; }, true};
  return separate_convex_bodies(P, Q, A.dim(), tol);
}

}  // namespace

SeparationVerdict strict_bp_separation(const ConeUnion& K, const ConeUnion& A,
                                       const Tolerances& tol) {
  same_space(K, A);
  SeparationVerdict v;
  const int n = A.dim();
  if (zero_in_cl_S(K, tol)) {
    v.obstruction = Obstruction{Vec::Zero(n), ObstructionReason::ZeroInClS};
    return v;
  }
  const ConeUnion neg_k = K.negated();
  const BodySeparation gap = hull_gap(neg_k, A, tol);
  v.hull_distance = gap.distance;
  if (gap.touching) {
    v.obstruction = Obstruction{gap.witness, ObstructionReason::HullsIntersect};
    if (gap.low_margin) v.notes.emplace_back("LowMargin");
    return v;
  }

  // 0 ∈ S_A^0 puts inf_Q <= 0, so gamma < 0 and x* can be scaled to gamma = -1.
  Vec xstar = gap.xstar;
  const double gamma_raw = sigma_base(neg_k, xstar, tol).value;
  if (!(gamma_raw < 0.0)) {
    v.obstruction = Obstruction{gap.closest_p, ObstructionReason::HullsIntersect};
    v.notes.emplace_back("LowMargin");
    return v;
  }
  xstar /= -gamma_raw;
  SeparationCertificate cert;
  cert.xstar = xstar;
  cert.gamma = sigma_base(neg_k, xstar, tol).value;
  cert.beta = std::min(0.0, mu_base(A, xstar, tol).value);
  cert.alpha = -(cert.beta + cert.gamma) / 2.0;
  cert.hull_distance = gap.distance;

  if (!((cert.beta - cert.gamma) / 2.0 > tol.eps_sep) || gap.low_margin) {
    v.obstruction = Obstruction{0.5 * (gap.closest_p + gap.closest_q),
                                ObstructionReason::HullsIntersect};
    v.notes.emplace_back("LowMargin");
    return v;
  }
  cert.aug_class = classify_aug_pair(K, AugPair{xstar, cert.alpha}, tol);
  try {
    cert.alpha_interval = alpha_interval_of(K, A, xstar, tol);
  } catch (const UnsupportedScale&) {
    v.notes.emplace_back("AlphaIntervalUnavailable");
  }
  v.separated = true;
  v.certificate = std::move(cert);
  return v;
}

std::optional<AlphaInterval> alpha_interval_of(const ConeUnion& K, const ConeUnion& A,
                                               const Vec& xstar,
                                               const Tolerances& tol) {
  same_space(K, A);
  AlphaInterval iv;
  iv.delta2 = mu_base(ConeUnion(conv_hull_cone(K, tol)), xstar, tol).value;
  iv.delta1 = std::max(0.0, -mu_base(A, xstar, tol).value) + tol.eps_sep;
  if (iv.delta2 > iv.delta1) return iv;
  return std::nullopt;
}

std::optional<Vec> separate_cone_hyperplane(const ConeUnion& A, const FinGenCone& K,
                                            const Tolerances& tol) {
  if (!(A.norm() == K.norm())) throw InputError("A and K live in different spaces");
  if (zero_in_cl_S(ConeUnion(K), tol)) {
    throw PreconditionError("0 lies in cl S_K; no linear cone separation exists");
  }
  const Eigen::MatrixXd Ga = A.all_normalized_generators();
  const Eigen::MatrixXd& Gk = K.normalized_generators();
  const Eigen::Index n = Ga.rows(), ma = Ga.cols(), mk = Gk.cols();
  // x* = yp - yn; <x*, a_i> - s_i = 0; <x*, k_j> - t_j = 1.
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(ma + mk, 2 * n + ma + mk);
  M.block(0, 0, ma, n) = Ga.transpose();
  M.block(0, n, ma, n) = -Ga.transpose();
  M.block(ma, 0, mk, n) = Gk.transpose();
  M.block(ma, n, mk, n) = -Gk.transpose();
  M.rightCols(ma + mk) = -Eigen::MatrixXd::Identity(ma + mk, ma + mk);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ma + mk);
  rhs.tail(mk).setOnes();
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(M.cols());
  cost.head(2 * n).setOnes();
  const LpResult r = solve_lp(M, rhs, cost);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  if (r.status != LpStatus::Optimal) throw NumericalFailure("cone separation LP failed");
  return Vec(r.x.head(n) - r.x.segment(n, n));
}

AnalysisReport check_necessary_conditions(const ConeUnion& K, const ConeUnion& A,
                                          const Tolerances& tol) {
  same_space(K, A);
  AnalysisReport rep;
  const ConeUnion neg_k = K.negated();
  const FinGenCone conv_k = conv_hull_cone(K, tol);
  rep.a_meets_conv_neg_k_trivially = cones_intersect_trivially(A, conv_k.negated(), tol);
  rep.zero_in_cl_s_neg_k = zero_in_cl_S(neg_k, tol);
  rep.zero_in_cl_s_a = zero_in_cl_S(A, tol);
  rep.conv_k_pointed = is_pointed(conv_k, tol).pointed;
  rep.conv_a_pointed = is_pointed(conv_hull_cone(A, tol), tol).pointed;
  rep.necessary_conditions = rep.a_meets_conv_neg_k_trivially && !rep.zero_in_cl_s_neg_k;
  if (rep.zero_in_cl_s_neg_k) {
    rep.hull_distance = 0.0;
    rep.hulls_disjoint = false;
  } else {
    const BodySeparation gap = hull_gap(neg_k, A, tol);
    rep.hull_distance = gap.distance;
    rep.hulls_disjoint = !gap.touching;
  }
  rep.a_convex = A.is_convex_piece();
  if (rep.a_convex) rep.convex_equivalence = rep.necessary_conditions == rep.hulls_disjoint;
  if (!rep.zero_in_cl_s_neg_k) rep.linear_separator = separate_cone_hyperplane(A, conv_k, tol);
  return rep;
}

}  // namespace conesep
