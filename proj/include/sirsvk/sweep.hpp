#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sirsvk/integrator.hpp"
#include "sirsvk/model.hpp"

namespace sirsvk {

/// Eradication times that were not reached within the horizon are written
/// as this value in tabular output.
inline constexpr double kNotReachedSentinel = -10.0;

enum class ExperimentId { KappaV, KappaI, ModelCompare, PeakVsKappa, Threshold };

std::string_view to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment(std::string_view name);

/// Figures 2..6 of the original study map onto the five experiments.
std::optional<ExperimentId> experiment_for_figure(int figure);

struct ExperimentSpec {
  ExperimentId id = ExperimentId::KappaV;
  Params base;
  State initial;
  std::vector<Confidence> grid;  // kappa values, strictly increasing
  IntegrationConfig integration;
  double eradication_threshold = 1e-3;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Built-in defaults for an experiment: parameter set, initial condition,
/// kappa grid and horizon.
ExperimentSpec default_experiment(ExperimentId id);

/// Checks the grid and that the initial state is admissible for every grid
/// point. MODEL_COMPARE ignores the grid.
Violations validate_spec(const ExperimentSpec& spec);

struct KappaRun {
  Confidence kappa;
  std::optional<Trajectory> trajectory;
  std::string error;  // set when trajectory is empty
};

/// One trajectory per grid point, all from spec.initial. A failing grid point
/// is reported in its KappaRun and does not stop the others.
std::vector<KappaRun> run_kappa_trajectories(const ExperimentSpec& spec);

enum class CompareModel { Sirs, Sirsv, SirsVk };

const char* label(CompareModel m);

struct LabeledTrajectory {
  CompareModel model;
  Trajectory trajectory;
};

/// SIRS (rho = 0), SIRSV (kappa infinite) and SIRS-V_kappa (spec.base), in
/// that order.
std::vector<LabeledTrajectory> run_model_compare(const ExperimentSpec& spec);

struct PeakPoint {
  Confidence kappa;
  Peak infection;
};

std::vector<PeakPoint> run_peak_vs_kappa(const ExperimentSpec& spec);

struct ThresholdPoint {
  Confidence kappa;
  double threshold_value = 0.0;
  std::optional<double> eradication_time;  // nullopt: not reached
};

/// Sorted by increasing threshold_value.
std::vector<ThresholdPoint> run_threshold_sweep(const ExperimentSpec& spec);

struct SweepRecord {
  double swept = 0.0;
  std::vector<double> observables;
};

struct SweepTable {
  std::vector<std::string> columns;  // observable names, after "swept"
  std::vector<SweepRecord> records;
};

/// Long form: one record per (kappa, recorded time) with columns t and the
/// compartment. Failed grid points are skipped.
SweepTable to_table(const std::vector<KappaRun>& runs, Compartment c);
SweepTable to_table(const std::vector<PeakPoint>& points);
SweepTable to_table(const std::vector<ThresholdPoint>& points);

}  // namespace sirsvk
