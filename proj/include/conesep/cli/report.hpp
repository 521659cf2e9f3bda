#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "conesep/separation.hpp"

namespace conesep::cli {

inline constexpr const char* kToolVersion = "conesep 0.1.0";

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AugClassification& c);
nlohmann::json to_json(const SeparationCertificate& c);
nlohmann::json to_json(const SeparationVerdict& v);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const AnalysisReport& r);

/// JSON text with every floating value printed as %.17g (non-finite values
/// become null). Key order follows the object, which nlohmann keeps sorted.
std::string dump_report(const nlohmann::json& j, int indent = 2);

}  // namespace conesep::cli
