#include "conesep/bp_cone.hpp"

#include <cmath>

#include "conesep/error.hpp"

namespace conesep {

double phi_eval(const NormSpec& ns, const Vec& xstar, double alpha, const Vec& x) {
  check_dim(xstar, ns, "phi_eval x*");
  check_dim(x, ns, "phi_eval x");
  if (alpha < 0.0) throw InputError("alpha must be >= 0");
  return xstar.dot(x) + alpha * raw_norm(x, ns.mode());
}

BPCone::BPCone(NormSpec ns, Vec xstar, double alpha)
    : norm_(ns), xstar_(std::move(xstar)), alpha_(alpha) {
  check_dim(xstar_, norm_, "BPCone x*");
  if (!std::isfinite(alpha_) || alpha_ < 0.0) throw InputError("alpha must be >= 0");
}

BPCone BPCone::as_bishop_phelps() const {
  if (!(alpha_ > 0.0)) throw PreconditionError("rescaling needs alpha > 0");
  return BPCone(norm_, xstar_ / alpha_, 1.0);
}

BPRegion bp_classify(const BPCone& C, const Vec& x, const Tolerances& tol) {
  if (!(dual_norm_eval(C.xstar(), C.norm()) > C.alpha())) {
    throw PreconditionError("degenerate cone: ||x*||_* <= alpha");
  }
  const double v = C.phi(x);
  if (v < -tol.eps_mem) return BPRegion::Interior;
  if (v <= tol.eps_mem) return BPRegion::Boundary;
  return BPRegion::Exterior;
}

bool bp_member(const BPCone& C, const Vec& x, const Tolerances& tol) {
  return C.phi(x) <= tol.eps_mem;
}

BPProperties bp_properties(const BPCone& C, const Tolerances& tol) {
  BPProperties p;
  p.pointed = C.alpha() > tol.eps_sep;
  p.nontrivial = dual_norm_eval(C.xstar(), C.norm()) > C.alpha() + tol.eps_sep;
  p.solid = p.nontrivial;
  return p;
}

BPCone bp_from_functional(const NormSpec& ns, const Vec& ystar) {
  return BPCone(ns, -ystar, 1.0);
}

}  // namespace conesep
