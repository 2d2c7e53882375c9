#include "sirsvk/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sirsvk {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_positive(Violations& out, const char* field, double value) {
  if (!(std::isfinite(value) && value > 0.0)) {
    out.push_back({field, std::string(field) + " must be > 0 and finite, got " + fmt(value)});
  }
}

}  // namespace

const char* to_string(Compartment c) {
  switch (c) {
    case Compartment::S: return "S";
    case Compartment::I: return "I";
    case Compartment::R: return "R";
    case Compartment::V: return "V";
  }
  return "?";
}

double State::operator[](Compartment c) const {
  switch (c) {
    case Compartment::S: return s;
    case Compartment::I: return i;
    case Compartment::R: return r;
    case Compartment::V: return v;
  }
  return 0.0;
}

std::string describe(const Violations& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) {
      out += "; ";
    }
    out += v.message;
  }
  return out;
}

Violations validate_params(const Params& p) {
  Violations out;
  require_positive(out, "beta", p.beta);
  require_positive(out, "gamma", p.gamma);
  require_positive(out, "omega", p.omega);
  if (p.variant == Variant::Sirs) {
    if (p.rho != 0.0) {
      out.push_back({"rho", "rho must be 0 in SIRS mode, got " + fmt(p.rho)});
    }
  } else {
    require_positive(out, "rho", p.rho);
  }
  const double k = p.kappa.value();
  if (!(k > 0.0)) {
    out.push_back({"kappa", "kappa must be > 0 or inf, got " + fmt(k)});
  }
  return out;
}

Violations validate_state(const Params& p, const State& x, double tol) {
  Violations out;
  const struct {
    const char* name;
    double value;
  } comps[] = {{"S", x.s}, {"I", x.i}, {"R", x.r}, {"V", x.v}};

  bool finite = true;
  for (const auto& c : comps) {
    if (!std::isfinite(c.value)) {
      out.push_back({c.name, std::string(c.name) + " is not finite"});
      finite = false;
    } else if (c.value < -tol) {
      out.push_back({c.name, std::string(c.name) + " = " + fmt(c.value) + " is negative"});
    } else if (c.value > 1.0 + tol) {
      out.push_back({c.name, std::string(c.name) + " = " + fmt(c.value) + " exceeds 1"});
    }
  }
  if (!finite) {
    return out;
  }
  const double total = x.sum();
  if (std::abs(total - 1.0) > tol) {
    out.push_back({"sum", "S + I + R + V = " + fmt(total) + ", must be 1"});
  }
  const double cap = p.kappa.effective();
  if (x.v > cap + tol) {
    out.push_back({"V", "V = " + fmt(x.v) + " exceeds min(1, kappa) = " + fmt(cap)});
  }
  return out;
}

void require_valid(const Params& p) {
  if (auto v = validate_params(p); !v.empty()) {
    throw ParameterError(std::move(v));
  }
}

void require_admissible(const Params& p, const State& x, double tol) {
  if (auto v = validate_state(p, x, tol); !v.empty()) {
    throw StateError(std::move(v));
  }
}

Derivative vector_field(const Params& p, const State& x) {
  require_valid(p);
  require_admissible(p, x);
  return vector_field_unchecked(p, x);
}

State clamp_to_admissible(const Params& p, const State& x, double tol) {
  require_admissible(p, x, tol);
  State out{std::max(x.s, 0.0), std::max(x.i, 0.0), std::max(x.r, 0.0),
            std::clamp(x.v, 0.0, p.kappa.effective())};
  return out;
}

Hesitance vaccine_hesitance(const Params& p) {
  if (p.kappa.is_infinite()) {
    return {0.0, true};
  }
  return {1.0 / p.kappa.value(), false};
}

}  // namespace sirsvk
