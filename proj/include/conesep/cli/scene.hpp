#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "conesep/augmented_dual.hpp"
#include "conesep/cones.hpp"

namespace conesep::cli {

enum class Task { Analyze, Separate, Certify, OracleCheck, ExportPlot };

std::string_view to_string(Task t);
Task parse_task(std::string_view text);

/// A parsed scene file. Pieces are kept raw (dim x m) so the scene can be
/// echoed verbatim; cones() validates them.
struct Scene {
  int dimension = 2;
  NormMode norm = NormMode::L2;
  std::vector<Eigen::MatrixXd> k_pieces;
  std::vector<Eigen::MatrixXd> a_pieces;
  Task task = Task::Analyze;
  std::optional<AugPair> certificate;
  Tolerances tol;
  std::uint64_t seed = 7;

  NormSpec norm_spec() const { return NormSpec(norm, dimension); }
  ConeUnion cone_k() const;
  ConeUnion cone_a() const;
};

/// Throws InputError on any schema violation.
Scene parse_scene(const nlohmann::json& j);
Scene load_scene(const std::string& path);
nlohmann::json scene_to_json(const Scene& s);

}  // namespace conesep::cli
