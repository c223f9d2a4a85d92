#pragma once

// Command-line front end: simulate, conjugate, analyze, verify-region,
// attractor and reproduce. All JSON carries "schema": "1".

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace lozimax::cli {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Runs the tool. Returns the process exit status; failures also write a
/// machine-readable error record to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct PresetOutcome {
  bool pass = false;
  std::string observed;
  nlohmann::json details = nlohmann::json::object();
};

struct Preset {
  std::string id;
  std::string anchor;    // the claim being reproduced, quoted in the output header
  std::string expected;
  std::function<PresetOutcome(std::uint64_t seed)> run;
};

const std::vector<Preset>& presets();

}  // namespace lozimax::cli
