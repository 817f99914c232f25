#pragma once

// "cfa/1" analysis reports. Integers only; keys are emitted in sorted order so identical
// inputs give byte-identical output.

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tcode/analysis.hpp"
#include "tcode/composite.hpp"
#include "tcode/minimality.hpp"

namespace tcode {

inline constexpr const char* kReportSchema = "cfa/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> rng_seed;
  std::string tool_version = kToolVersion;
  /// Milliseconds; only set when explicitly requested since it breaks byte-identical reruns.
  std::optional<std::int64_t> wall_time_ms;
};

[[nodiscard]] nlohmann::json to_json(const RunManifest& manifest);
[[nodiscard]] nlohmann::json to_json(const Witness& w);
[[nodiscard]] nlohmann::json to_json(const MinimalityVerdict& v);
[[nodiscard]] nlohmann::json to_json(const Construction2Report& r);
[[nodiscard]] nlohmann::json analysis_report(const CodeAnalysis& a, const RunManifest& manifest);
[[nodiscard]] nlohmann::json theorem6_report(const Theorem6Result& r, const RunManifest& manifest);

/// Two-space indented JSON with a trailing newline.
[[nodiscard]] std::string render(const nlohmann::json& j);

}  // namespace tcode
