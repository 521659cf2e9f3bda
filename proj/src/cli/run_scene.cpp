#include "conesep/cli/run_scene.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "conesep/base_oracle.hpp"
#include "conesep/cli/plot_export.hpp"
#include "conesep/cli/report.hpp"
#include "conesep/error.hpp"
#include "conesep/oracle.hpp"
#include "conesep/separation.hpp"

namespace conesep::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultSamples = 10000;

struct Outcome {
  json results;
  int exit_code = kExitOk;
};

Outcome do_analyze(const ConeUnion& K, const ConeUnion& A, const Scene& s) {
  return {json{{"analysis", to_json(check_necessary_conditions(K, A, s.tol))}}, kExitOk};
}

Outcome do_separate(const ConeUnion& K, const ConeUnion& A, const Scene& s, int samples) {
  Outcome o;
  const SeparationVerdict v = strict_bp_separation(K, A, s.tol);
  o.results["verdict"] = to_json(v);
  if (!v.separated) {
    o.exit_code = kExitNotSeparated;
    return o;
  }
  const AugPair pair{v.certificate->xstar, v.certificate->alpha};
  const VerificationResult check = verify_strict_separation(K, A, pair, samples, s.seed, s.tol);
  o.results["verification"] = to_json(check);
  // A certificate the solver itself cannot verify is a numerical breakdown.
  if (!check.ok || check.disagreements != 0) o.exit_code = kExitNumerical;
  return o;
}

Outcome do_certify(const ConeUnion& K, const ConeUnion& A, const Scene& s, int samples) {
  if (!s.certificate) throw InputError("task certify needs a certificate");
  Outcome o;
  const AugPair& c = *s.certificate;
  o.results["classification"] = to_json(classify_aug_pair(K, c, s.tol));
  const VerificationResult check = verify_strict_separation(K, A, c, samples, s.seed, s.tol);
  o.results["verification"] = to_json(check);
  if (A.dim() <= 3) {
    o.results["boundary_verification"] =
        to_json(verify_boundary_separation(K, A, c, samples, s.seed, s.tol));
  }
  o.exit_code = check.ok ? kExitOk : kExitNotSeparated;
  return o;
}

Outcome do_oracle_check(const ConeUnion& K, const ConeUnion& A, const Scene& s,
                        int samples) {
  if (A.dim() > 3) throw UnsupportedScale("oracle-check needs dimension <= 3");
  Outcome o;
  OracleConfig cfg;
  cfg.seed = s.seed;
  const SeparationVerdict v = strict_bp_separation(K, A, s.tol);
  o.results["verdict"] = to_json(v);
  std::optional<AugPair> cert = s.certificate;
  if (!cert && v.certificate) cert = AugPair{v.certificate->xstar, v.certificate->alpha};

  const double mu_tol = A.dim() == 2 ? 5e-3 : 2e-2;
  const Vec c = cert ? cert->xstar : Vec(Vec::Ones(A.dim()));
  const double mu_exact = mu_base(K, c, s.tol).value;
  const double mu_grid = oracle_mu(K, c, cfg, s.tol);
  json agree{{"mu_exact", mu_exact},
             {"mu_oracle", mu_grid},
             {"mu_agree", std::abs(mu_exact - mu_grid) <= mu_tol}};
  bool all = agree["mu_agree"].get<bool>();
  if (cert) {
    const bool sep_oracle = oracle_separation(K, A, *cert, cfg, s.tol);
    const bool sep_exact = verify_strict_separation(K, A, *cert, samples, s.seed, s.tol).ok;
    const bool cor_oracle = oracle_cor_test(K, *cert, cfg, s.tol);
    const bool cor_exact = classify_aug_pair(K, *cert, s.tol).in_cor_a_plus;
    agree["separation_oracle"] = sep_oracle;
    agree["separation_verifier"] = sep_exact;
    agree["separation_agree"] = sep_oracle == sep_exact;
    agree["cor_oracle"] = cor_oracle;
    agree["cor_classifier"] = cor_exact;
    agree["cor_agree"] = cor_oracle == cor_exact;
    all = all && sep_oracle == sep_exact && cor_oracle == cor_exact;
  }
  agree["all_agree"] = all;
  o.results["oracle"] = agree;
  o.exit_code = all ? kExitOk : kExitNumerical;
  return o;
}

Outcome do_export_plot(const ConeUnion& K, const ConeUnion& A, const Scene& s,
                       int samples, const std::string& path) {
  if (path.empty()) throw InputError("export-plot needs an output path (--out)");
  if (A.dim() != 2) throw UnsupportedScale("export-plot needs a 2D scene");
  Outcome o;
  std::optional<AugPair> cert = s.certificate;
  if (!cert) {
    const SeparationVerdict v = strict_bp_separation(K, A, s.tol);
    o.results["verdict"] = to_json(v);
    if (v.certificate) cert = AugPair{v.certificate->xstar, v.certificate->alpha};
  }
  const auto rows = plot_rows(K, A, cert, samples, s.seed, s.tol);
  write_plot_csv(rows, path);
  std::vector<std::string> labels;
  for (const auto& r : rows) {
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) {
      labels.push_back(r.label);
    }
  }
  o.results["plot"] = {{"path", path}, {"rows", rows.size()}, {"labels", labels}};
  return o;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Input:
      return "input";
    case ErrorKind::Numerical:
      return "numerical";
    case ErrorKind::UnsupportedScale:
      return "unsupported-scale";
    case ErrorKind::Precondition:
      return "precondition";
  }
  return "?";
}

int exit_for(ErrorKind k) { return k == ErrorKind::Numerical ? kExitNumerical : kExitInvalidInput; }

}  // namespace

RunResult run_scene(const Scene& scene_in, const RunOptions& opt) {
  Scene s = scene_in;
  if (opt.task) s.task = *opt.task;
  if (opt.seed) s.seed = *opt.seed;
  const int samples = opt.samples.value_or(kDefaultSamples);

  RunResult out;
  out.report = json::object();
  out.report["version"] = kToolVersion;
  out.report["scene"] = scene_to_json(s);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (samples < 1) throw InputError("--samples must be positive");
    const ConeUnion K = s.cone_k();
    const ConeUnion A = s.cone_a();
    Outcome o;
    switch (s.task) {
      case Task::Analyze:
        o = do_analyze(K, A, s);
        break;
      case Task::Separate:
        o = do_separate(K, A, s, samples);
        break;
      case Task::Certify:
        o = do_certify(K, A, s, samples);
        break;
      case Task::OracleCheck:
        o = do_oracle_check(K, A, s, samples);
        break;
      case Task::ExportPlot:
        o = do_export_plot(K, A, s, samples, opt.plot_path);
        break;
    }
    out.report["results"] = std::move(o.results);
    out.exit_code = o.exit_code;
  } catch (const Error& e) {
    out.exit_code = exit_for(e.kind());
    out.report["error"] = {{"kind", kind_name(e.kind())}, {"message", e.what()}};
    out.diagnostics = std::string("conesep: ") + kind_name(e.kind()) + " error: " + e.what();
  }
  out.report["exit_code"] = out.exit_code;
  out.report["wall_time"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

RunResult run_scene_file(const std::string& path, const RunOptions& opt) {
  try {
    return run_scene(load_scene(path), opt);
  } catch (const Error& e) {
    RunResult out;
    out.exit_code = exit_for(e.kind());
    out.report = json{{"version", kToolVersion},
                      {"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}},
                      {"exit_code", out.exit_code}};
    out.diagnostics = std::string("conesep: ") + e.what();
    return out;
  }
}

}  // namespace conesep::cli
