#include "conesep/geometry.hpp"

#include <cmath>
#include <string>

#include "conesep/error.hpp"
#include "conesep/nnls.hpp"

namespace conesep {

std::string_view to_string(NormMode mode) {
  switch (mode) {
    case NormMode::L1:
      return "l1";
    case NormMode::L2:
      return "l2";
    case NormMode::LInf:
      return "linf";
  }
  return "?";
}

NormMode parse_norm_mode(std::string_view text) {
  if (text == "l1" || text == "L1") return NormMode::L1;
  if (text == "l2" || text == "L2") return NormMode::L2;
  if (text == "linf" || text == "LINF" || text == "Linf") return NormMode::LInf;
  throw InputError("unknown norm '" + std::string(text) + "'");
}

NormSpec::NormSpec(NormMode mode, int dim) : mode_(mode), dim_(dim) {
  if (dim < 2) throw InputError("dimension must be at least 2");
}

double raw_norm(const Eigen::Ref<const Vec>& v, NormMode mode) {
  switch (mode) {
    case NormMode::L1:
      return v.lpNorm<1>();
    case NormMode::L2:
      return v.norm();
    case NormMode::LInf:
      return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

void check_dim(const Vec& v, const NormSpec& ns, const char* what) {
  if (v.size() != ns.dim()) {
    throw InputError(std::string(what) + ": expected dimension " +
                     std::to_string(ns.dim()) + ", got " +
                     std::to_string(v.size()));
  }
  if (!v.allFinite()) throw InputError(std::string(what) + ": non-finite entry");
}

double norm_eval(const Vec& v, const NormSpec& ns) {
  check_dim(v, ns, "norm_eval");
  return raw_norm(v, ns.mode());
}

double dual_norm_eval(const Vec& f, const NormSpec& ns) {
  check_dim(f, ns, "dual_norm_eval");
  return raw_norm(f, dual_mode(ns.mode()));
}

Vec normalized(const Vec& v, const NormSpec& ns) {
  const double n = norm_eval(v, ns);
  if (!(n > 0.0)) throw InputError("cannot normalize the zero vector");
  return v / n;
}

Vec project_onto_cone(const Vec& c, const Eigen::MatrixXd& generators,
                      const Tolerances& tol) {
  if (c.size() != generators.rows()) {
    throw InputError("project_onto_cone: dimension mismatch");
  }
  const NnlsResult r = nnls(generators, c, tol.max_iter);
  if (!r.converged) {
    throw NumericalFailure("project_onto_cone: NNLS did not converge");
  }
  const double scale = std::max(1.0, c.norm());
  if (r.complementarity > tol.eps_mem * scale * scale ||
      r.max_gradient > std::sqrt(tol.eps_mem) * scale) {
    throw NumericalFailure("project_onto_cone: optimality check failed");
  }
  return generators * r.x;
}

}  // namespace conesep
