#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "reachkit/aeb.hpp"
#include "reachkit/risk.hpp"
#include "reachkit/verifier.hpp"

namespace reachkit {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RiskSection {
  std::size_t n_d = 10;
  std::size_t n_r = 17;
  std::optional<risk::ParamDistribution> d_dist;  // required by `risk`,
  std::optional<risk::ParamDistribution> r_dist;  // optional for `sweep`
  risk::GridAxes axes;
};

struct RunConfig {
  aeb::AebSpec scenario;
  VerifierConfig verifier;
  std::optional<RiskSection> risk;
  std::string outputs = "out";
};

/// Parse and validate a JSON run configuration. Unknown keys anywhere are
/// rejected; parse errors carry the line number. Throws ConfigError.
RunConfig load_config(const std::string& path);

}  // namespace reachkit
