#pragma once

#include <Eigen/Dense>

namespace conesep {

struct NnlsResult {
  Eigen::VectorXd x;
  double residual = 0.0;      // ||A x - b||_2
  double max_gradient = 0.0;  // max_j (A^T (b - A x))_j, <= 0 up to noise at optimum
  double complementarity = 0.0;  // max_j |x_j * (A^T (b - A x))_j|
  int iterations = 0;
  bool converged = false;
};

/// Lawson-Hanson active-set solver for min ||A x - b||_2 subject to x >= 0.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                int max_iter = 10000);

}  // namespace conesep
