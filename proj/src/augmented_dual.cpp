#include "conesep/augmented_dual.hpp"

#include <cmath>

#include "conesep/base_oracle.hpp"
#include "conesep/error.hpp"
#include "conesep/lp.hpp"

namespace conesep {

AugPair make_aug_pair(Vec xstar, double alpha) {
  if (!xstar.allFinite()) throw InputError("x* has a non-finite entry");
  if (!std::isfinite(alpha) || alpha < 0.0) throw InputError("alpha must be >= 0");
  return AugPair{std::move(xstar), alpha};
}

AugClassification classify_aug_pair(const ConeUnion& K, const AugPair& p,
                                    const Tolerances& tol) {
  if (p.alpha < 0.0) throw InputError("alpha must be >= 0");
  AugClassification out;
  out.mu = mu_base(K, p.xstar, tol).value;
  out.in_a_plus = out.mu >= p.alpha - tol.eps_mem;
  out.in_a_sharp = out.mu > p.alpha + tol.eps_sep;
  out.in_aw_sharp = out.in_a_sharp;
  out.in_cor_a_plus = out.in_a_sharp && p.alpha > tol.eps_sep;
  return out;
}

AugPair construct_positive_pair(const ConeUnion& K, const Vec& xstar,
                                const Tolerances& tol) {
  const double c = mu_base(K, xstar, tol).value;
  if (!(c > tol.eps_sep)) {
    throw PreconditionError(
        "no positive pair: min of x* over the norm-base is not positive");
  }
  return AugPair{xstar, c};
}

std::optional<Vec> find_sharp_functional(const ConeUnion& K, const Tolerances&) {
  const Eigen::MatrixXd G = K.all_normalized_generators();
  const Eigen::Index n = G.rows(), m = G.cols();
  // y = yp - yn; G^T y - s = 1; minimise sum(yp + yn).
  Eigen::MatrixXd A(m, 2 * n + m);
  A.leftCols(n) = G.transpose();
  A.middleCols(n, n) = -G.transpose();
  A.rightCols(m) = -Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd cost = Eigen::VectorXd::Zero(2 * n + m);
  cost.head(2 * n).setOnes();
  const LpResult r = solve_lp(A, Eigen::VectorXd::Ones(m), cost);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  if (r.status != LpStatus::Optimal) {
    throw NumericalFailure("sharp functional LP failed");
  }
  return Vec(r.x.head(n) - r.x.segment(n, n));
}

}  // namespace conesep
