#pragma once

namespace conesep {

/// Numerical margin policy shared by every module.
///
/// `eps_mem` is the slack used for membership / equality tests,
/// `eps_sep` the margin a strict inequality must clear before it is
/// certified, and `max_iter` caps every iterative solver.
struct Tolerances {
  double eps_mem = 1e-9;
  double eps_sep = 1e-7;
  int max_iter = 10000;
};

}  // namespace conesep
