#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sirsvk {

/// Default tolerance on the simplex sum and compartment bounds at API boundaries.
inline constexpr double kDefaultSumTolerance = 1e-9;

/// Vaccine confidence: the largest population fraction that will ever be
/// vaccinated. Either a positive number or the unbounded (SIRSV) limit.
class Confidence {
public:
  constexpr Confidence() = default;
  constexpr explicit Confidence(double value) : value_(value) {}

  static constexpr Confidence infinite() {
    return Confidence(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr double value() const { return value_; }

  /// min(1, kappa); the upper bound on the vaccinated fraction.
  constexpr double effective() const { return value_ < 1.0 ? value_ : 1.0; }

  friend constexpr bool operator==(Confidence, Confidence) = default;

private:
  double value_ = 1.0;
};

/// SirsVk is the full model. Sirs switches vaccination off (rho must be 0).
enum class Variant { SirsVk, Sirs };

struct Params {
  double beta = 0.0;   // transmission rate
  double gamma = 0.0;  // recovery rate
  double rho = 0.0;    // vaccination roll-out rate
  double omega = 0.0;  // waning-immunity rate
  Confidence kappa;
  Variant variant = Variant::SirsVk;

  friend bool operator==(const Params&, const Params&) = default;
};

enum class Compartment { S, I, R, V };

const char* to_string(Compartment c);

/// Population fractions in each compartment.
struct State {
  double s = 0.0;
  double i = 0.0;
  double r = 0.0;
  double v = 0.0;

  double sum() const { return s + i + r + v; }
  double operator[](Compartment c) const;

  friend bool operator==(const State&, const State&) = default;
};

struct Derivative {
  double ds = 0.0;
  double di = 0.0;
  double dr = 0.0;
  double dv = 0.0;

  double sum() const { return ds + di + dr + dv; }

  friend bool operator==(const Derivative&, const Derivative&) = default;
};

struct Violation {
  std::string field;
  std::string message;
};
using Violations = std::vector<Violation>;

std::string describe(const Violations& violations);

/// Base for input-domain failures; carries every violated constraint.
class DomainError : public std::invalid_argument {
public:
  DomainError(const std::string& what, Violations violations)
      : std::invalid_argument(what + ": " + describe(violations)),
        violations_(std::move(violations)) {}

  const Violations& violations() const { return violations_; }

private:
  Violations violations_;
};

class ParameterError : public DomainError {
public:
  explicit ParameterError(Violations v)
      : DomainError("invalid parameters", std::move(v)) {}
};

class StateError : public DomainError {
public:
  explicit StateError(Violations v)
      : DomainError("inadmissible state", std::move(v)) {}
};

Violations validate_params(const Params& p);
Violations validate_state(const Params& p, const State& x,
                          double tol = kDefaultSumTolerance);

void require_valid(const Params& p);
void require_admissible(const Params& p, const State& x,
                        double tol = kDefaultSumTolerance);

/// Effective per-capita vaccination rate rho * (1 - v / kappa).
/// The saturation factor is exactly 1 for infinite confidence.
inline double vaccination_rate(const Params& p, double v) {
  if (p.kappa.is_infinite()) {
    return p.rho;
  }
  return p.rho * (1.0 - v / p.kappa.value());
}

/// Right-hand side of the SIRS-V_kappa system. No validation.
inline Derivative vector_field_unchecked(const Params& p, const State& x) {
  const double infection = p.beta * x.s * x.i;
  const double recovery = p.gamma * x.i;
  const double waning = p.omega * x.r;
  const double vax = vaccination_rate(p, x.v);
  return Derivative{
      -infection - vax * x.s + waning,
      infection - recovery,
      recovery - waning - vax * x.r,
      vax * (x.s + x.r),
  };
}

/// Validating entry point: throws ParameterError / StateError.
Derivative vector_field(const Params& p, const State& x);

/// Clamps rounding-level excursions (negative components, v above
/// min(1, kappa)) back into the admissible set. Throws StateError when the
/// state is outside it by more than tol.
State clamp_to_admissible(const Params& p, const State& x,
                          double tol = kDefaultSumTolerance);

struct Hesitance {
  double value = 0.0;
  bool limit = false;  // true when reported as the kappa -> infinity limit
};

/// Vaccine hesitance 1/kappa. Infinite confidence yields {0, limit=true}.
Hesitance vaccine_hesitance(const Params& p);

}  // namespace sirsvk
