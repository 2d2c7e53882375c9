#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sirsvk/model.hpp"

namespace sirsvk {

struct IntegrationConfig {
  double t0 = 0.0;
  double t_end = 100.0;
  double dt = 0.01;
  std::size_t record_stride = 1;

  friend bool operator==(const IntegrationConfig&, const IntegrationConfig&) = default;
};

Violations validate_config(const IntegrationConfig& cfg);

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  Params params;

  std::size_t size() const { return times.size(); }
  bool empty() const { return times.empty(); }
  const State& final_state() const { return states.back(); }
};

/// Thrown when a step leaves the admissible set by more than the divergence
/// margin, which in practice means dt is too large.
class DivergenceError : public std::runtime_error {
public:
  DivergenceError(std::size_t step, double time, const std::string& detail);

  std::size_t step() const { return step_; }
  double time() const { return time_; }

private:
  std::size_t step_;
  double time_;
};

/// Multiple of the state tolerance a raw RK4 step may stray before it is
/// treated as divergence instead of rounding.
inline constexpr double kDivergenceFactor = 1e3;

/// One classical fourth-order Runge-Kutta step of size h. No clamping.
State rk4_step(const Params& p, const State& x, double h);

/// Fixed-step RK4 from cfg.t0 to cfg.t_end. Every cfg.record_stride-th step
/// and the final step are stored, each clamped into the admissible set.
/// When (t_end - t0) is not a multiple of dt the last step is shortened.
Trajectory integrate(const Params& p, const State& x0, const IntegrationConfig& cfg,
                     double tol = kDefaultSumTolerance);

/// Earliest recorded time at which the compartment is strictly below
/// threshold, or nullopt if that never happens within the trajectory.
std::optional<double> first_time_below(const Trajectory& traj, Compartment c,
                                       double threshold);

struct Peak {
  double value = 0.0;
  double time = 0.0;
};

/// Largest recorded value of the compartment; ties resolve to the earliest time.
Peak peak(const Trajectory& traj, Compartment c);

}  // namespace sirsvk
