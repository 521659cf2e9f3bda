#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

#include "conesep/tolerances.hpp"

namespace conesep {

/// Elements of E and functionals of E* share this representation; the
/// pairing is the standard inner product of R^n.
using Vec = Eigen::VectorXd;

/// Column-wise point set (one point per column).
using PointCloud = Eigen::MatrixXd;

enum class NormMode { L1, L2, LInf };

/// L1 <-> LInf, L2 <-> L2.
constexpr NormMode dual_mode(NormMode mode) {
  switch (mode) {
    case NormMode::L1:
      return NormMode::LInf;
    case NormMode::LInf:
      return NormMode::L1;
    case NormMode::L2:
      return NormMode::L2;
  }
  return mode;
}

std::string_view to_string(NormMode mode);
NormMode parse_norm_mode(std::string_view text);

/// Norm family together with the ambient dimension (at least 2).
class NormSpec {
 public:
  NormSpec(NormMode mode, int dim);

  NormMode mode() const { return mode_; }
  int dim() const { return dim_; }
  NormSpec dual() const { return NormSpec(dual_mode(mode_), dim_); }

  friend bool operator==(const NormSpec&, const NormSpec&) = default;

 private:
  NormMode mode_;
  int dim_;
};

/// Norm without dimension bookkeeping; used in inner loops.
double raw_norm(const Eigen::Ref<const Vec>& v, NormMode mode);

double norm_eval(const Vec& v, const NormSpec& ns);
double dual_norm_eval(const Vec& f, const NormSpec& ns);

/// v / ||v|| in the scene norm. Throws InputError on a zero vector.
Vec normalized(const Vec& v, const NormSpec& ns);

void check_dim(const Vec& v, const NormSpec& ns, const char* what);

/// Euclidean projection of `c` onto cone(generators) by nonnegative least
/// squares. Always Euclidean, regardless of the scene norm.
Vec project_onto_cone(const Vec& c, const Eigen::MatrixXd& generators,
                      const Tolerances& tol = {});

}  // namespace conesep
