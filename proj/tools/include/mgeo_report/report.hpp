#pragma once

// JSON configuration and report layer behind the metallic-geo tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mgeo/case.hpp"
#include "mgeo/errors.hpp"

namespace mgeo::report {

/// Insertion-ordered, so reports keep a readable and stable field order.
using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "metallic-geo/1";

enum ExitStatus : int { ok = 0, falsified = 1, config_error = 2, numerical_failure = 3 };

/// Thrown for malformed or invalid configurations; the message starts with the
/// path of the offending field ("space.c1: ...").
class ConfigError : public Error {
 public:
  using Error::Error;
};

CaseConfig parse_config(const json& j);
CaseConfig load_config(const std::string& path);
json config_to_json(const CaseConfig& cfg);

/// Command-line overrides applied on top of a loaded config.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<double> tol;
  std::optional<std::vector<TheoremId>> theorems;
  std::optional<Tr2Reading> reading;
};
void apply(const Overrides& o, CaseConfig& cfg);

/// Parses "wintgen,chen" or "all".
std::vector<TheoremId> parse_theorem_list(const std::string& text);

struct Outcome {
  json report;
  int exit_status = ok;
};

/// Worker count: hardware concurrency, capped by METALLIC_GEO_THREADS.
int worker_threads();

Outcome cmd_invariants(const CaseConfig& cfg, int threads);
Outcome cmd_verify(const CaseConfig& cfg, int threads);
Outcome cmd_check_derivation(const CaseConfig& cfg, int threads);

struct OracleOptions {
  std::int64_t chen_samples = 1'000'000;
  std::int64_t ddvv_samples = 100'000;
  std::uint64_t seed = 42;
};
Outcome cmd_oracles(const OracleOptions& opt);
Outcome cmd_examples();

/// Two-space indented JSON with a trailing newline.
std::string render(const json& report);

}  // namespace mgeo::report
