#include "sirsvk/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sirsvk {

namespace {

State axpy(const State& x, double h, const Derivative& d) {
  return State{x.s + h * d.ds, x.i + h * d.di, x.r + h * d.dr, x.v + h * d.dv};
}

// Largest distance by which x violates the admissible set (NaN if non-finite).
double excursion(const Params& p, const State& x) {
  if (!(std::isfinite(x.s) && std::isfinite(x.i) && std::isfinite(x.r) &&
        std::isfinite(x.v))) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const double lowest = std::min({x.s, x.i, x.r, x.v});
  const double highest = std::max({x.s, x.i, x.r, x.v});
  return std::max({0.0, -lowest, highest - 1.0, x.v - p.kappa.effective(),
                   std::abs(x.sum() - 1.0)});
}

}  // namespace

DivergenceError::DivergenceError(std::size_t step, double time, const std::string& detail)
    : std::runtime_error("integration diverged at step " + std::to_string(step) +
                         " (t = " + std::to_string(time) + "): " + detail +
                         "; reduce dt"),
      step_(step),
      time_(time) {}

Violations validate_config(const IntegrationConfig& cfg) {
  Violations out;
  if (!std::isfinite(cfg.t0)) {
    out.push_back({"t0", "t0 must be finite"});
  }
  if (!std::isfinite(cfg.t_end) || !(cfg.t_end > cfg.t0)) {
    out.push_back({"t_end", "t_end must be finite and greater than t0"});
  }
  if (!std::isfinite(cfg.dt) || !(cfg.dt > 0.0)) {
    out.push_back({"dt", "dt must be > 0"});
  } else if (out.empty() && cfg.dt > cfg.t_end - cfg.t0) {
    out.push_back({"dt", "dt must not exceed t_end - t0"});
  }
  if (cfg.record_stride == 0) {
    out.push_back({"record_stride", "record_stride must be a positive integer"});
  }
  return out;
}

State rk4_step(const Params& p, const State& x, double h) {
  const Derivative k1 = vector_field_unchecked(p, x);
  const Derivative k2 = vector_field_unchecked(p, axpy(x, 0.5 * h, k1));
  const Derivative k3 = vector_field_unchecked(p, axpy(x, 0.5 * h, k2));
  const Derivative k4 = vector_field_unchecked(p, axpy(x, h, k3));
  const double w = h / 6.0;
  return State{
      x.s + w * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds),
      x.i + w * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di),
      x.r + w * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr),
      x.v + w * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv),
  };
}

Trajectory integrate(const Params& p, const State& x0, const IntegrationConfig& cfg,
                     double tol) {
  require_valid(p);
  if (auto v = validate_config(cfg); !v.empty()) {
    throw std::invalid_argument("invalid integration config: " + describe(v));
  }
  State x = clamp_to_admissible(p, x0, tol);

  const double span = cfg.t_end - cfg.t0;
  const double ratio = span / cfg.dt;
  auto steps = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio)) {
    steps = static_cast<std::size_t>(std::ceil(ratio));
  }

  Trajectory traj;
  traj.params = p;
  const std::size_t expected = steps / cfg.record_stride + 2;
  traj.times.reserve(expected);
  traj.states.reserve(expected);
  traj.times.push_back(cfg.t0);
  traj.states.push_back(x);

  const double limit = kDivergenceFactor * tol;
  double t = cfg.t0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const double t_next = (k == steps) ? cfg.t_end : cfg.t0 + static_cast<double>(k) * cfg.dt;
    const State raw = rk4_step(p, x, t_next - t);
    const double off = excursion(p, raw);
    if (!(off <= limit)) {
      throw DivergenceError(k, t_next, "state left the admissible set by " + std::to_string(off));
    }
    State clamped{std::max(raw.s, 0.0), std::max(raw.i, 0.0), std::max(raw.r, 0.0),
                  std::clamp(raw.v, 0.0, p.kappa.effective())};
    if (!(std::abs(clamped.sum() - 1.0) <= tol)) {
      throw DivergenceError(k, t_next, "population sum drifted beyond tolerance");
    }
    x = clamped;
    t = t_next;
    if (k % cfg.record_stride == 0 || k == steps) {
      traj.times.push_back(t);
      traj.states.push_back(x);
    }
  }
  return traj;
}

std::optional<double> first_time_below(const Trajectory& traj, Compartment c,
                                       double threshold) {
  if (traj.empty()) {
    throw std::invalid_argument("first_time_below: empty trajectory");
  }
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("first_time_below: threshold must lie in (0, 1)");
  }
  for (std::size_t k = 0; k < traj.size(); ++k) {
    if (traj.states[k][c] < threshold) {
      return traj.times[k];
    }
  }
  return std::nullopt;
}

Peak peak(const Trajectory& traj, Compartment c) {
  if (traj.empty()) {
    throw std::invalid_argument("peak: empty trajectory");
  }
  Peak best{traj.states[0][c], traj.times[0]};
  for (std::size_t k = 1; k < traj.size(); ++k) {
    const double value = traj.states[k][c];
    if (value > best.value) {
      best = {value, traj.times[k]};
    }
  }
  return best;
}

}  // namespace sirsvk
