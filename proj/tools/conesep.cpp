#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "conesep/cli/report.hpp"
#include "conesep/cli/run_scene.hpp"
#include "conesep/error.hpp"

using namespace conesep::cli;

int main(int argc, char** argv) {
  CLI::App app{"Strict separation of cones by Bishop-Phelps cones"};
  std::string task_name, scene_path, out_path;
  int samples = 10000;
  std::uint64_t seed = 0;
  app.add_option("task", task_name,
                 "analyze | separate | certify | oracle-check | export-plot")
      ->required();
  app.add_option("--scene", scene_path, "scene JSON file")->required();
  app.add_option("--out", out_path, "report file (CSV file for export-plot)");
  auto* samples_opt = app.add_option("--samples", samples, "verification samples");
  auto* seed_opt = app.add_option("--seed", seed, "override the scene seed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  RunOptions opt;
  try {
    opt.task = parse_task(task_name);
  } catch (const conesep::InputError& e) {
    std::cerr << "conesep: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (*samples_opt) opt.samples = samples;
  if (*seed_opt) opt.seed = seed;
  const bool plot = *opt.task == Task::ExportPlot;
  if (plot) opt.plot_path = out_path;

  const RunResult r = run_scene_file(scene_path, opt);
  if (!r.diagnostics.empty()) std::cerr << r.diagnostics << "\n";
  const std::string text = dump_report(r.report);
  if (!plot && !out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "conesep: cannot write '" << out_path << "'\n";
      return kExitInvalidInput;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return r.exit_code;
}
