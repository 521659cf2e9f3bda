#include "conesep/cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace conesep::cli {

using nlohmann::json;

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vec vec_from_json(const json& j) {
  const auto xs = j.get<std::vector<double>>();
  return Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
}

json to_json(const AugClassification& c) {
  return {{"in_a_plus", c.in_a_plus},     {"in_a_sharp", c.in_a_sharp},
          {"in_aw_sharp", c.in_aw_sharp}, {"in_cor_a_plus", c.in_cor_a_plus},
          {"mu", c.mu}};
}

json to_json(const SeparationCertificate& c) {
  json j{{"xstar", vec_to_json(c.xstar)},
         {"alpha", c.alpha},
         {"beta", c.beta},
         {"gamma", c.gamma},
         {"hull_distance", c.hull_distance},
         {"aug_class", to_json(c.aug_class)}};
  if (c.alpha_interval) {
    j["alpha_interval"] = {c.alpha_interval->delta1, c.alpha_interval->delta2};
  } else {
    j["alpha_interval"] = nullptr;
  }
  return j;
}

json to_json(const SeparationVerdict& v) {
  json j{{"separated", v.separated}, {"hull_distance", v.hull_distance}};
  j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  if (v.obstruction) {
    j["obstruction"] = {{"reason", std::string(to_string(v.obstruction->reason))},
                        {"witness_point", vec_to_json(v.obstruction->witness_point)}};
  } else {
    j["obstruction"] = nullptr;
  }
  j["notes"] = v.notes;
  return j;
}

json to_json(const VerificationResult& r) {
  return {{"ok", r.ok},
          {"base_ok", r.base_ok},
          {"min_margin_A", r.min_margin_a},
          {"max_margin_K", r.max_margin_k},
          {"disagreements", r.disagreements},
          {"samples", r.samples}};
}

json to_json(const AnalysisReport& r) {
  json j{{"A_meets_cl_conv_negK_trivially", r.a_meets_conv_neg_k_trivially},
         {"zero_in_cl_S_negK", r.zero_in_cl_s_neg_k},
         {"zero_in_cl_S_A", r.zero_in_cl_s_a},
         {"conv_K_pointed", r.conv_k_pointed},
         {"conv_A_pointed", r.conv_a_pointed},
         {"necessary_conditions", r.necessary_conditions},
         {"hull_distance", r.hull_distance},
         {"hulls_disjoint", r.hulls_disjoint},
         {"A_convex", r.a_convex}};
  j["convex_equivalence"] = r.convex_equivalence ? json(*r.convex_equivalence) : json(nullptr);
  j["linear_separator"] = r.linear_separator ? vec_to_json(*r.linear_separator) : json(nullptr);
  return j;
}

namespace {

void emit(const json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close_pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += buf;
      }
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      bool flat = true;
      for (const auto& e : j) flat = flat && e.is_primitive();
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += nl + pad;
        emit(e, indent, depth + 1, out);
        first = false;
      }
      if (!flat) out += nl + close_pad;
      out += "]";
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        out += nl + pad;
        out += json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        emit(it.value(), indent, depth + 1, out);
        first = false;
      }
      out += nl + close_pad;
      out += "}";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_report(const json& j, int indent) {
  std::string out;
  emit(j, indent, 0, out);
  out += "\n";
  return out;
}

}  // namespace conesep::cli
