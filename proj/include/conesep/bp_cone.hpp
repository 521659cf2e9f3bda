#pragma once

#include "conesep/geometry.hpp"

namespace conesep {

/// phi(x) = <x*, x> + alpha ||x||.
double phi_eval(const NormSpec& ns, const Vec& xstar, double alpha,
                const Vec& x);

/// Sublevel cone C≤ = {x : phi_{x*,alpha}(x) <= 0}.
class BPCone {
 public:
  BPCone(NormSpec ns, Vec xstar, double alpha);

  const NormSpec& norm() const { return norm_; }
  const Vec& xstar() const { return xstar_; }
  double alpha() const { return alpha_; }

  double phi(const Vec& x) const { return phi_eval(norm_, xstar_, alpha_, x); }

  /// For alpha > 0: the same set written as C≤_{x*/alpha, 1}, i.e. the
  /// Bishop-Phelps cone C(-x*/alpha).
  BPCone as_bishop_phelps() const;

 private:
  NormSpec norm_;
  Vec xstar_;
  double alpha_;
};

enum class BPRegion { Interior, Boundary, Exterior };

/// Requires ||x*||_* > alpha (otherwise C< is empty and int C≤ = C< fails);
/// throws PreconditionError. Boundary band |phi| <= eps_mem.
BPRegion bp_classify(const BPCone& C, const Vec& x, const Tolerances& tol = {});

/// phi(x) <= eps_mem.
bool bp_member(const BPCone& C, const Vec& x, const Tolerances& tol = {});

struct BPProperties {
  bool nontrivial = false;
  bool pointed = false;
  bool solid = false;
};

BPProperties bp_properties(const BPCone& C, const Tolerances& tol = {});

/// C(y*) = {x : y*(x) >= ||x||} as the sublevel cone ((-y*), 1).
BPCone bp_from_functional(const NormSpec& ns, const Vec& ystar);

}  // namespace conesep
