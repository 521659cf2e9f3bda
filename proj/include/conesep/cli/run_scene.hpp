#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "conesep/cli/scene.hpp"

namespace conesep::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNotSeparated = 3,
  kExitNumerical = 4,
};

/// Command-line overrides applied on top of the scene file.
struct RunOptions {
  std::optional<Task> task;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::string plot_path;  // export-plot output
};

struct RunResult {
  nlohmann::json report;  // null when the scene could not be loaded
  int exit_code = kExitOk;
  std::string diagnostics;
};

RunResult run_scene(const Scene& scene, const RunOptions& opt = {});

/// Loads and runs; parse failures map to kExitInvalidInput.
RunResult run_scene_file(const std::string& path, const RunOptions& opt = {});

}  // namespace conesep::cli
