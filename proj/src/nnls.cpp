#include "conesep/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace conesep {

namespace {

// Unconstrained least squares restricted to the passive columns.
Eigen::VectorXd passive_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                              const std::vector<int>& passive) {
  Eigen::MatrixXd Ap(A.rows(), static_cast<Eigen::Index>(passive.size()));
  for (std::size_t k = 0; k < passive.size(); ++k) Ap.col(k) = A.col(passive[k]);
  Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);
  Eigen::VectorXd full = Eigen::VectorXd::Zero(A.cols());
  for (std::size_t k = 0; k < passive.size(); ++k) full(passive[k]) = z(k);
  return full;
}

}  // namespace

NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, int max_iter) {
  const Eigen::Index n = A.cols();
  NnlsResult out;
  out.x = Eigen::VectorXd::Zero(n);
  std::vector<char> in_passive(n, 0);
  std::vector<int> passive;

  const double scale = std::max({1.0, b.norm(), A.size() ? A.cwiseAbs().maxCoeff() : 1.0});
  const double grad_tol = 1e-12 * scale * scale * std::max<Eigen::Index>(1, n);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd w = A.transpose() * (b - A * x);
  int last_added = -1;
  int it = 0;
  bool converged = false;

  while (it < max_iter) {
    // Pick the most promising inactive column.
    int best = -1;
    double best_w = grad_tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_passive[j] && w(j) > best_w && j != last_added) {
        best_w = w(j);
        best = static_cast<int>(j);
      }
    }
    if (best < 0) {
      converged = true;
      break;
    }
    in_passive[best] = 1;
    passive.push_back(best);
    last_added = best;

    // Inner loop: keep the passive solution feasible.
    while (true) {
      ++it;
      Eigen::VectorXd z = passive_solve(A, b, passive);
      double min_z = std::numeric_limits<double>::infinity();
      for (int j : passive) min_z = std::min(min_z, z(j));
      if (min_z > 0.0 || passive.empty()) {
        x = z;
        break;
      }
      double step = 1.0;
      for (int j : passive) {
        if (z(j) <= 0.0) {
          const double denom = x(j) - z(j);
          if (denom > 0.0) step = std::min(step, x(j) / denom);
        }
      }
      x += step * (z - x);
      std::vector<int> keep;
      for (int j : passive) {
        if (x(j) > 1e-15 * scale) {
          keep.push_back(j);
        } else {
          x(j) = 0.0;
          in_passive[j] = 0;
        }
      }
      passive.swap(keep);
      if (it >= max_iter) break;
    }
    w = A.transpose() * (b - A * x);
    // A newly added column that was immediately dropped may not be
    // re-added on the next pass (prevents cycling on degenerate data).
    if (std::find(passive.begin(), passive.end(), last_added) != passive.end()) {
      last_added = -1;
    }
  }

  const Eigen::VectorXd r = b - A * x;
  w = A.transpose() * r;
  out.x = x;
  out.residual = r.norm();
  out.max_gradient = n ? w.maxCoeff() : 0.0;
  out.complementarity = n ? x.cwiseProduct(w).cwiseAbs().maxCoeff() : 0.0;
  out.iterations = it;
  out.converged = converged;
  return out;
}

}  // namespace conesep
