#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sirsvk/integrator.hpp"
#include "sirsvk/model.hpp"
#include "sirsvk/sweep.hpp"

namespace sirsvk {

inline constexpr std::string_view kConfigFormat = "sirsvk-config/1";

/// Malformed document, unknown key, wrong type or missing required field.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Everything a CLI run needs. Model parameters and the initial state are
/// optional here because simulate/analyze require them to be given
/// explicitly unless an experiment supplies defaults.
struct RunConfig {
  std::string format{kConfigFormat};
  std::optional<ExperimentId> experiment;
  Variant variant = Variant::SirsVk;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> rho;
  std::optional<double> omega;
  std::optional<Confidence> kappa;
  std::optional<State> initial;
  IntegrationConfig integration;
  std::vector<Confidence> grid;
  double eradication_threshold = 1e-3;
  unsigned threads = 0;
  std::string output;  // empty: standard output

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// A fully populated config reproducing the experiment's defaults.
RunConfig config_from_experiment(const ExperimentSpec& spec);

/// Parses a config document (a flat JSON object with dotted keys, e.g.
/// "params.beta") and applies it on top of base. Unknown keys are rejected.
/// Syntax errors report line and column.
RunConfig parse_config(std::string_view text, RunConfig base = {});

/// Resolves defaults, then applies the document. A figure number, or an
/// "experiment" key in the document, selects the experiment defaults that the
/// document overrides.
RunConfig load_run_config(std::string_view text, std::optional<int> paper_figure);

/// Serializes to the same document format parse_config accepts.
std::string dump_config(const RunConfig& cfg);

/// Throws ConfigError naming every missing field, ParameterError when the
/// values are out of domain.
Params resolve_params(const RunConfig& cfg);
State resolve_initial(const RunConfig& cfg);
ExperimentSpec resolve_experiment(const RunConfig& cfg);

}  // namespace sirsvk
