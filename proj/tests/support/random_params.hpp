#pragma once

// Seeded generators for property tests. The uniform draw is built from raw
// mt19937_64 bits so sequences match across standard library implementations.

#include <cstdint>
#include <random>

#include "sirsvk/model.hpp"

namespace testing_support {

class Draw {
public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  bool chance(double p) { return uniform(0.0, 1.0) < p; }

  /// Rates covering the built-in experiments and a bit beyond.
  sirsvk::Params params(double kappa_hi = 2.0, double infinite_share = 0.0) {
    sirsvk::Params p;
    p.beta = uniform(0.1, 3.0);
    p.gamma = uniform(0.1, 2.0);
    p.rho = uniform(0.01, 1.0);
    p.omega = uniform(0.01, 3.0);
    p.kappa = chance(infinite_share) ? sirsvk::Confidence::infinite()
                                     : sirsvk::Confidence(uniform(0.01, kappa_hi));
    return p;
  }

  /// Admissible state: V in [0, min(1, kappa)], the rest split the remainder.
  sirsvk::State state(const sirsvk::Params& p, double min_infected = 0.0) {
    const double v = uniform(0.0, p.kappa.effective());
    const double rest = 1.0 - v;
    double a = uniform(0.0, 1.0);
    double b = uniform(min_infected, 1.0);
    double c = uniform(0.0, 1.0);
    const double total = a + b + c;
    sirsvk::State x;
    x.v = v;
    x.s = rest * (a / total);
    x.i = rest * (b / total);
    x.r = rest - x.s - x.i;
    if (x.r < 0.0) {
      x.r = 0.0;
    }
    return x;
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace testing_support
