#include "conesep/cli/scene.hpp"

#include <fstream>
#include <sstream>

#include "conesep/error.hpp"

namespace conesep::cli {

using nlohmann::json;

std::string_view to_string(Task t) {
  switch (t) {
    case Task::Analyze:
      return "analyze";
    case Task::Separate:
      return "separate";
    case Task::Certify:
      return "certify";
    case Task::OracleCheck:
      return "oracle-check";
    case Task::ExportPlot:
      return "export-plot";
  }
  return "?";
}

Task parse_task(std::string_view text) {
  for (Task t : {Task::Analyze, Task::Separate, Task::Certify, Task::OracleCheck,
                 Task::ExportPlot}) {
    if (text == to_string(t)) return t;
  }
  throw InputError("unknown task '" + std::string(text) + "'");
}

namespace {

std::vector<Eigen::MatrixXd> parse_pieces(const json& cone, int dim, const char* name) {
  if (!cone.is_object() || !cone.contains("pieces") || !cone["pieces"].is_array()) {
    throw InputError(std::string(name) + ": expected {\"pieces\": [...]}");
  }
  const json& pieces = cone["pieces"];
  if (pieces.empty()) throw InputError(std::string(name) + ": no pieces");
  std::vector<Eigen::MatrixXd> out;
  for (const json& piece : pieces) {
    if (!piece.is_array() || piece.empty()) {
      throw InputError(std::string(name) + ": every piece needs a generator");
    }
    Eigen::MatrixXd G(dim, static_cast<Eigen::Index>(piece.size()));
    for (std::size_t j = 0; j < piece.size(); ++j) {
      const json& g = piece[j];
      if (!g.is_array() || static_cast<int>(g.size()) != dim) {
        throw InputError(std::string(name) + ": generator of wrong dimension");
      }
      for (int i = 0; i < dim; ++i) {
        if (!g[i].is_number()) throw InputError(std::string(name) + ": non-numeric entry");
        G(i, static_cast<Eigen::Index>(j)) = g[i].get<double>();
      }
    }
    out.push_back(std::move(G));
  }
  return out;
}

json pieces_to_json(const std::vector<Eigen::MatrixXd>& pieces) {
  json arr = json::array();
  for (const auto& G : pieces) {
    json piece = json::array();
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      json g = json::array();
      for (Eigen::Index i = 0; i < G.rows(); ++i) g.push_back(G(i, j));
      piece.push_back(std::move(g));
    }
    arr.push_back(std::move(piece));
  }
  return json{{"pieces", arr}};
}

ConeUnion build(const std::vector<Eigen::MatrixXd>& raw, const NormSpec& ns,
                const Tolerances& tol) {
  std::vector<FinGenCone> pieces;
  for (const auto& G : raw) pieces.push_back(validate_cone(G, ns, tol));
  return ConeUnion(std::move(pieces));
}

}  // namespace

ConeUnion Scene::cone_k() const { return build(k_pieces, norm_spec(), tol); }
ConeUnion Scene::cone_a() const { return build(a_pieces, norm_spec(), tol); }

Scene parse_scene(const json& j) {
  try {
    if (!j.is_object()) throw InputError("scene must be a JSON object");
    Scene s;
    if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
      throw InputError("scene.dimension must be an integer");
    }
    s.dimension = j["dimension"].get<int>();
    if (s.dimension < 2) throw InputError("scene.dimension must be at least 2");
    s.norm = parse_norm_mode(j.at("norm").get<std::string>());
    if (!j.contains("K") || !j.contains("A")) throw InputError("scene needs K and A");
    s.k_pieces = parse_pieces(j["K"], s.dimension, "K");
    s.a_pieces = parse_pieces(j["A"], s.dimension, "A");
    if (j.contains("task")) s.task = parse_task(j["task"].get<std::string>());
    if (j.contains("tolerances")) {
      const json& t = j["tolerances"];
      if (t.contains("eps_mem")) s.tol.eps_mem = t["eps_mem"].get<double>();
      if (t.contains("eps_sep")) s.tol.eps_sep = t["eps_sep"].get<double>();
      if (t.contains("max_iter")) s.tol.max_iter = t["max_iter"].get<int>();
      if (!(s.tol.eps_mem > 0.0) || !(s.tol.eps_sep > 0.0) || s.tol.max_iter < 1) {
        throw InputError("tolerances must be positive");
      }
    }
    if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("certificate") && !j["certificate"].is_null()) {
      const json& c = j["certificate"];
      const auto xs = c.at("xstar").get<std::vector<double>>();
      if (static_cast<int>(xs.size()) != s.dimension) {
        throw InputError("certificate.xstar has the wrong dimension");
      }
      s.certificate = make_aug_pair(Eigen::Map<const Vec>(xs.data(), s.dimension),
                                    c.at("alpha").get<double>());
    }
    if (s.task == Task::Certify && !s.certificate) {
      throw InputError("task certify needs a certificate");
    }
    return s;
  } catch (const json::exception& e) {
    throw InputError(std::string("scene: ") + e.what());
  }
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read scene file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(std::string("scene is not valid JSON: ") + e.what());
  }
  return parse_scene(j);
}

json scene_to_json(const Scene& s) {
  json j;
  j["dimension"] = s.dimension;
  j["norm"] = std::string(to_string(s.norm));
  j["K"] = pieces_to_json(s.k_pieces);
  j["A"] = pieces_to_json(s.a_pieces);
  j["task"] = std::string(to_string(s.task));
  j["tolerances"] = {{"eps_mem", s.tol.eps_mem},
                     {"eps_sep", s.tol.eps_sep},
                     {"max_iter", s.tol.max_iter}};
  j["seed"] = s.seed;
  if (s.certificate) {
    json xs = json::array();
    for (Eigen::Index i = 0; i < s.certificate->xstar.size(); ++i) {
      xs.push_back(s.certificate->xstar(i));
    }
    j["certificate"] = {{"xstar", xs}, {"alpha", s.certificate->alpha}};
  }
  return j;
}

}  // namespace conesep::cli
