#pragma once

#include <functional>

#include "conesep/geometry.hpp"

namespace conesep {

/// Maps a direction d to a point of the body maximising <d, .>.
using SupportOracle = std::function<Vec(const Vec&)>;

/// Compact convex body given by its support oracle; `add_origin` replaces
/// the body by conv({0} ∪ body).
struct ConvexBody {
  SupportOracle support;
  bool add_origin = false;
};

/// Outcome of the closest-pair search between P and Q.
///
/// When not touching, `xstar` = q - p points from P towards Q and
/// sup_P <x*, .> = `sup_p` < `inf_q` = inf_Q <x*, .>. When touching,
/// `witness` is a point common to both bodies up to `distance`.
struct BodySeparation {
  bool touching = false;
  bool low_margin = false;  // distance in (0, eps_sep]
  Vec xstar;
  double sup_p = 0.0;
  double inf_q = 0.0;
  double distance = 0.0;
  double gap = 0.0;  // final Frank-Wolfe gap
  Vec closest_p;
  Vec closest_q;
  Vec witness;
  int iterations = 0;
};

/// Closest pair of two compact convex bodies by fully corrective
/// Frank-Wolfe on the difference body Q - P. Each step pulls one extreme
/// point from each oracle and re-solves the min-norm problem over all
/// retained atoms (NNLS). Throws NumericalFailure when max_iter is hit
/// with a distance above eps_sep.
BodySeparation separate_convex_bodies(const ConvexBody& P, const ConvexBody& Q,
                                      int dim, const Tolerances& tol = {});

}  // namespace conesep
