#pragma once

#include <cstddef>

#include "conesep/geometry.hpp"

// Data-parallel inner loops used by the verifiers and the brute-force
// oracle. Every kernel has a serial reference and an OpenMP version; both
// reduce with order-independent min/max (ties broken by lowest index), so
// their results agree bit for bit.
namespace conesep::kernels {

struct DotExtrema {
  double min = 0.0;
  double max = 0.0;
  Eigen::Index argmin = -1;
  Eigen::Index argmax = -1;
};

DotExtrema dot_extrema_serial(const PointCloud& points, const Vec& c);
DotExtrema dot_extrema_parallel(const PointCloud& points, const Vec& c);

/// Which side of the separating cone the points should fall on.
enum class Side { Outside, Inside };

/// Result of scanning points against (x*, alpha).
///
/// `phi_*` are phi(x)/||x|| (homogeneous form, evaluated on the point as
/// given), `base_*` are <x*, x/||x||> + alpha (base form). `phi_failures`
/// and `base_failures` count points violating the strict requirement
/// (Outside: > eps_sep, Inside: < -eps_sep); `disagreements` counts points
/// where the two forms reach different verdicts.
struct MarginScan {
  double phi_min = 0.0;
  double phi_max = 0.0;
  double base_min = 0.0;
  double base_max = 0.0;
  std::size_t phi_failures = 0;
  std::size_t base_failures = 0;
  std::size_t disagreements = 0;
  std::size_t count = 0;
};

MarginScan margin_scan_serial(const PointCloud& points, const Vec& xstar,
                              double alpha, NormMode mode, Side side,
                              double eps_sep);
MarginScan margin_scan_parallel(const PointCloud& points, const Vec& xstar,
                                double alpha, NormMode mode, Side side,
                                double eps_sep);

/// Rescales every column to unit norm in place.
void normalize_columns_serial(PointCloud& points, NormMode mode);
void normalize_columns_parallel(PointCloud& points, NormMode mode);

}  // namespace conesep::kernels
