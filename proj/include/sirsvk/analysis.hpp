#pragma once

#include <optional>

#include "sirsvk/model.hpp"

namespace sirsvk {

enum class EquilibriumKind { Dfe, Eep };

struct Equilibrium {
  EquilibriumKind kind = EquilibriumKind::Dfe;
  State state;
  bool exists = true;
};

struct StabilityVerdict {
  bool dfe_gas = true;
  bool eep_exists = false;
  double threshold_value = 0.0;  // (1 - kappa) * beta / gamma
};

// In SIRS mode vaccination is switched off and the equilibria below refer to
// an unvaccinated population, i.e. the formulas are evaluated at kappa = 0.

/// The unique disease-free equilibrium (1 - min(1,kappa), 0, 0, min(1,kappa)).
Equilibrium dfe(const Params& p);

/// The endemic equilibrium (gamma/beta, I*, R*, kappa) when it exists, i.e.
/// when the GAS threshold (1 - kappa) beta / gamma exceeds one.
std::optional<Equilibrium> eep(const Params& p);

/// Basic reproduction number beta / gamma.
double r0(const Params& p);

/// Effective reproduction number S * R0.
double rt(const Params& p, const State& x);

/// (1 - V) * R0, an upper bound on rt.
double rt_upper_bound(const Params& p, const State& x);

/// (1 - kappa) * beta / gamma for finite kappa (negative when kappa > 1),
/// -inf for infinite kappa and beta / gamma in SIRS mode.
double gas_threshold(const Params& p);

/// Global stability: the DFE is GAS iff the threshold is <= 1; otherwise the
/// EEP exists. Exactly one of the two flags is set.
StabilityVerdict classify(const Params& p);

}  // namespace sirsvk
