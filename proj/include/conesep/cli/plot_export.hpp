#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conesep/augmented_dual.hpp"
#include "conesep/cones.hpp"

namespace conesep::cli {

struct PlotRow {
  std::string label;
  double x = 0.0;
  double y = 0.0;
};

/// Plot data for a 2D scene: rays, bases, hull polygons and, given a
/// certificate, the zero set of phi and the line <x*, .> = -alpha inside
/// the unit ball. Throws UnsupportedScale unless dim == 2.
std::vector<PlotRow> plot_rows(const ConeUnion& K, const ConeUnion& A,
                               const std::optional<AugPair>& cert,
                               int samples, std::uint64_t seed,
                               const Tolerances& tol = {});

void write_plot_csv(const std::vector<PlotRow>& rows, const std::string& path);

}  // namespace conesep::cli
