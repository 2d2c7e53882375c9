#pragma once

// Reference solver for tests: explicit Euler at a very small step on its own
// transcription of the SIRS-V_kappa equations. Shares no code with the
// library integrator.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct Rates {
  double beta, gamma, rho, omega, kappa;  // kappa = INFINITY for the SIRSV limit
};

using Vec = std::array<double, 4>;  // S, I, R, V

inline Vec rhs(const Rates& p, const Vec& z) {
  const double sat = std::isinf(p.kappa) ? 1.0 : 1.0 - z[3] / p.kappa;
  return {
      -p.beta * z[0] * z[1] - p.rho * sat * z[0] + p.omega * z[2],
      p.beta * z[0] * z[1] - p.gamma * z[1],
      p.gamma * z[1] - p.omega * z[2] - p.rho * sat * z[2],
      p.rho * sat * (z[0] + z[2]),
  };
}

struct Sample {
  double t;
  Vec z;
};

/// Euler from t = 0 with step h; samples every `every` time units.
inline std::vector<Sample> euler(const Rates& p, Vec z, double t_end, double h, double every) {
  const auto steps = static_cast<std::size_t>(std::llround(t_end / h));
  const auto per_sample = static_cast<std::size_t>(std::llround(every / h));
  std::vector<Sample> out{{0.0, z}};
  for (std::size_t k = 1; k <= steps; ++k) {
    const Vec d = rhs(p, z);
    for (int j = 0; j < 4; ++j) {
      z[j] += h * d[j];
    }
    if (k % per_sample == 0) {
      out.push_back({static_cast<double>(k) * h, z});
    }
  }
  return out;
}

struct PeakI {
  double value;
  double time;
};

/// Peak of I with sub-step resolution from Euler steps of size h.
inline PeakI peak_infection(const Rates& p, Vec z, double t_end, double h) {
  const auto steps = static_cast<std::size_t>(std::llround(t_end / h));
  PeakI best{z[1], 0.0};
  for (std::size_t k = 1; k <= steps; ++k) {
    const Vec d = rhs(p, z);
    for (int j = 0; j < 4; ++j) {
      z[j] += h * d[j];
    }
    if (z[1] > best.value) {
      best = {z[1], static_cast<double>(k) * h};
    }
  }
  return best;
}

}  // namespace oracle
