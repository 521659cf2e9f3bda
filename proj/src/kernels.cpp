#include "conesep/kernels.hpp"

#include <algorithm>
#include <limits>

namespace conesep::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (value, index) ordering used by every reduction so that serial and
// parallel runs pick the same arg.
inline bool better_min(double v, Eigen::Index i, double bv, Eigen::Index bi) {
  return v < bv || (v == bv && i < bi);
}
inline bool better_max(double v, Eigen::Index i, double bv, Eigen::Index bi) {
  return v > bv || (v == bv && i < bi);
}

void merge(DotExtrema& into, const DotExtrema& part) {
  if (part.argmin >= 0 &&
      (into.argmin < 0 || better_min(part.min, part.argmin, into.min, into.argmin))) {
    into.min = part.min;
    into.argmin = part.argmin;
  }
  if (part.argmax >= 0 &&
      (into.argmax < 0 || better_max(part.max, part.argmax, into.max, into.argmax))) {
    into.max = part.max;
    into.argmax = part.argmax;
  }
}

struct PointVerdict {
  double phi;
  double base;
  bool phi_fail;
  bool base_fail;
};

inline PointVerdict judge(const Eigen::Ref<const Vec>& x, const Vec& xstar,
                          double alpha, NormMode mode, Side side, double eps) {
  const double len = raw_norm(x, mode);
  const double lin = xstar.dot(x);
  PointVerdict v;
  v.phi = (lin + alpha * len) / len;
  v.base = xstar.dot(x / len) + alpha;
  if (side == Side::Outside) {
    v.phi_fail = !(v.phi > eps);
    v.base_fail = !(v.base > eps);
  } else {
    v.phi_fail = !(v.phi < -eps);
    v.base_fail = !(v.base < -eps);
  }
  return v;
}

void absorb(MarginScan& s, const PointVerdict& v) {
  s.phi_min = std::min(s.phi_min, v.phi);
  s.phi_max = std::max(s.phi_max, v.phi);
  s.base_min = std::min(s.base_min, v.base);
  s.base_max = std::max(s.base_max, v.base);
  s.phi_failures += v.phi_fail;
  s.base_failures += v.base_fail;
  s.disagreements += (v.phi_fail != v.base_fail);
  ++s.count;
}

MarginScan empty_scan() {
  MarginScan s;
  s.phi_min = s.base_min = kInf;
  s.phi_max = s.base_max = -kInf;
  return s;
}

}  // namespace

DotExtrema dot_extrema_serial(const PointCloud& points, const Vec& c) {
  DotExtrema out;
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    const double v = c.dot(points.col(j));
    DotExtrema one{v, v, j, j};
    merge(out, one);
  }
  return out;
}

DotExtrema dot_extrema_parallel(const PointCloud& points, const Vec& c) {
  DotExtrema out;
  const Eigen::Index n = points.cols();
#pragma omp parallel
  {
    DotExtrema local;
#pragma omp for schedule(static) nowait
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = c.dot(points.col(j));
      DotExtrema one{v, v, j, j};
      merge(local, one);
    }
#pragma omp critical(conesep_dot_extrema)
    merge(out, local);
  }
  return out;
}

MarginScan margin_scan_serial(const PointCloud& points, const Vec& xstar,
                              double alpha, NormMode mode, Side side,
                              double eps_sep) {
  MarginScan s = empty_scan();
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    absorb(s, judge(points.col(j), xstar, alpha, mode, side, eps_sep));
  }
  return s;
}

MarginScan margin_scan_parallel(const PointCloud& points, const Vec& xstar,
                                double alpha, NormMode mode, Side side,
                                double eps_sep) {
  MarginScan s = empty_scan();
  double phi_min = kInf, phi_max = -kInf, base_min = kInf, base_max = -kInf;
  std::size_t phi_f = 0, base_f = 0, dis = 0;
  const Eigen::Index n = points.cols();
#pragma omp parallel for schedule(static) reduction(min : phi_min, base_min) \
    reduction(max : phi_max, base_max) reduction(+ : phi_f, base_f, dis)
  for (Eigen::Index j = 0; j < n; ++j) {
    const PointVerdict v = judge(points.col(j), xstar, alpha, mode, side, eps_sep);
    phi_min = std::min(phi_min, v.phi);
    phi_max = std::max(phi_max, v.phi);
    base_min = std::min(base_min, v.base);
    base_max = std::max(base_max, v.base);
    phi_f += v.phi_fail;
    base_f += v.base_fail;
    dis += (v.phi_fail != v.base_fail);
  }
  s.phi_min = phi_min;
  s.phi_max = phi_max;
  s.base_min = base_min;
  s.base_max = base_max;
  s.phi_failures = phi_f;
  s.base_failures = base_f;
  s.disagreements = dis;
  s.count = static_cast<std::size_t>(n);
  return s;
}

void normalize_columns_serial(PointCloud& points, NormMode mode) {
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    const double len = raw_norm(points.col(j), mode);
    if (len > 0.0) points.col(j) /= len;
  }
}

void normalize_columns_parallel(PointCloud& points, NormMode mode) {
  const Eigen::Index n = points.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < n; ++j) {
    const double len = raw_norm(points.col(j), mode);
    if (len > 0.0) points.col(j) /= len;
  }
}

}  // namespace conesep::kernels
