#include "sirsvk/analysis.hpp"

#include <limits>

namespace sirsvk {

namespace {

// Confidence that enters the equilibrium formulas.
double formula_kappa(const Params& p) {
  return p.variant == Variant::Sirs ? 0.0 : p.kappa.value();
}

}  // namespace

Equilibrium dfe(const Params& p) {
  require_valid(p);
  const double cap = p.variant == Variant::Sirs ? 0.0 : p.kappa.effective();
  return Equilibrium{EquilibriumKind::Dfe, State{1.0 - cap, 0.0, 0.0, cap}, true};
}

std::optional<Equilibrium> eep(const Params& p) {
  require_valid(p);
  if (!classify(p).eep_exists) {
    return std::nullopt;
  }
  const double kappa = formula_kappa(p);
  const double s = p.gamma / p.beta;
  const double endemic = 1.0 - kappa - s;  // I* + R*
  const double i = endemic / (1.0 + p.gamma / p.omega);
  const double r = endemic / (1.0 + p.omega / p.gamma);
  return Equilibrium{EquilibriumKind::Eep, State{s, i, r, kappa}, true};
}

double r0(const Params& p) { return p.beta / p.gamma; }

double rt(const Params& p, const State& x) { return x.s * r0(p); }

double rt_upper_bound(const Params& p, const State& x) { return (1.0 - x.v) * r0(p); }

double gas_threshold(const Params& p) {
  if (p.variant != Variant::Sirs && p.kappa.is_infinite()) {
    return -std::numeric_limits<double>::infinity();
  }
  return (1.0 - formula_kappa(p)) * p.beta / p.gamma;
}

StabilityVerdict classify(const Params& p) {
  require_valid(p);
  StabilityVerdict verdict;
  verdict.threshold_value = gas_threshold(p);
  verdict.dfe_gas = verdict.threshold_value <= 1.0;
  verdict.eep_exists = !verdict.dfe_gas;
  return verdict;
}

}  // namespace sirsvk
