#include <gtest/gtest.h>

#include <cmath>

#include "sirsvk/analysis.hpp"
#include "sirsvk/model.hpp"
#include "support/random_params.hpp"

using namespace sirsvk;

namespace {

const Params kBase{1.6, 0.8, 0.12, 0.2, Confidence(0.8)};

bool names(const Violations& v, const std::string& field) {
  for (const auto& item : v) {
    if (item.field == field) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST(VectorField, ZeroAtDiseaseFreeState) {
  const Derivative d = vector_field(kBase, State{0.2, 0.0, 0.0, 0.8});
  EXPECT_EQ(d.ds, 0.0);
  EXPECT_EQ(d.di, 0.0);
  EXPECT_EQ(d.dr, 0.0);
  EXPECT_EQ(d.dv, 0.0);
}

TEST(VectorField, HandEvaluatedTerms) {
  // beta*s*i = 0.35424, rho*s = 0.0648, omega*r = 0.01, gamma*i = 0.328, rho*r = 0.006
  const Derivative d = vector_field(kBase, State{0.54, 0.41, 0.05, 0.0});
  EXPECT_NEAR(d.ds, -0.40904, 1e-15);
  EXPECT_NEAR(d.di, 0.02624, 1e-15);
  EXPECT_NEAR(d.dr, 0.312, 1e-15);
  EXPECT_NEAR(d.dv, 0.0708, 1e-15);
  EXPECT_NEAR(d.sum(), 0.0, 1e-15);
}

TEST(VectorField, VaccinationStopsAtConfidence) {
  Params p = kBase;
  p.kappa = Confidence(0.5);
  for (double s : {0.0, 0.1, 0.3, 0.5}) {
    const State x{s, 0.5 - s, 0.0, 0.5};
    EXPECT_EQ(vector_field(p, x).dv, 0.0);
  }
  EXPECT_EQ(vector_field(p, State{0.2, 0.1, 0.2, 0.5}).dv, 0.0);
}

TEST(VectorField, AcceptsWaningRateOfKappaFigures) {
  Params p = kBase;
  p.omega = 3.0;
  const Derivative d = vector_field(p, State{0.54, 0.41, 0.05, 0.0});
  EXPECT_NEAR(d.ds, -0.35424 - 0.0648 + 0.15, 1e-15);
}

TEST(VectorField, RejectsBadInputs) {
  Params p = kBase;
  p.gamma = 0.0;
  EXPECT_THROW(vector_field(p, State{1, 0, 0, 0}), ParameterError);
  EXPECT_THROW(vector_field(kBase, State{0.5, 0.5, 0.5, 0.5}), StateError);
}

TEST(VectorField, InfiniteConfidenceIsTheLargeKappaLimit) {
  testing_support::Draw draw(11);
  for (int n = 0; n < 200; ++n) {
    Params inf = draw.params();
    inf.kappa = Confidence::infinite();
    Params big = inf;
    big.kappa = Confidence(1e8);
    const State x = draw.state(inf);
    const Derivative a = vector_field(inf, x);
    const Derivative b = vector_field(big, x);
    EXPECT_LT(std::abs(a.ds - b.ds), 1e-6);
    EXPECT_LT(std::abs(a.di - b.di), 1e-6);
    EXPECT_LT(std::abs(a.dr - b.dr), 1e-6);
    EXPECT_LT(std::abs(a.dv - b.dv), 1e-6);
  }
}

TEST(VectorFieldProperty, ConservesPopulation) {
  testing_support::Draw draw(1);
  for (int n = 0; n < 2000; ++n) {
    const Params p = draw.params(2.0, 0.1);
    const State x = draw.state(p);
    EXPECT_LT(std::abs(vector_field(p, x).sum()), 1e-14);
  }
}

TEST(VectorFieldProperty, VaccinatedCapBehaviour) {
  testing_support::Draw draw(2);
  for (int n = 0; n < 1000; ++n) {
    Params p = draw.params(3.0);
    State x = draw.state(p);
    const double cap = p.kappa.effective();
    // Move V to its cap while keeping the simplex sum.
    const double scale = (1.0 - cap) / (x.s + x.i + x.r);
    x = State{x.s * scale, x.i * scale, x.r * scale, cap};
    const Derivative d = vector_field_unchecked(p, x);
    if (p.kappa.value() <= 1.0) {
      EXPECT_EQ(d.dv, 0.0);
    } else {
      EXPECT_NEAR(d.dv, p.rho * (1.0 - 1.0 / p.kappa.value()) * (x.s + x.r), 1e-15);
      EXPECT_GE(d.dv, 0.0);
    }
  }
}

TEST(VectorFieldProperty, BoundaryIsRepelling) {
  testing_support::Draw draw(3);
  for (int n = 0; n < 1000; ++n) {
    const Params p = draw.params(2.0, 0.1);
    const State x = draw.state(p);
    // Zero one compartment at a time, renormalising the others.
    for (int zero = 0; zero < 4; ++zero) {
      double z[4] = {x.s, x.i, x.r, x.v};
      z[zero] = 0.0;
      const double total = z[0] + z[1] + z[2] + z[3];
      if (total <= 0.0) {
        continue;
      }
      State y{z[0] / total, z[1] / total, z[2] / total, z[3] / total};
      if (y.v > p.kappa.effective()) {
        continue;
      }
      const Derivative d = vector_field_unchecked(p, y);
      const double rates[4] = {d.ds, d.di, d.dr, d.dv};
      EXPECT_GE(rates[zero], 0.0) << "compartment " << zero;
    }
  }
}

TEST(VectorFieldProperty, ZeroAtDfeForAllConfidences) {
  testing_support::Draw draw(4);
  for (int n = 0; n < 1000; ++n) {
    const Params p = draw.params(3.0, 0.1);
    const Derivative d = vector_field(p, dfe(p).state);
    EXPECT_EQ(d.ds, 0.0);
    EXPECT_EQ(d.di, 0.0);
    EXPECT_EQ(d.dr, 0.0);
    EXPECT_EQ(d.dv, 0.0);
  }
}

TEST(ValidateParams, BaseSetIsValid) {
  EXPECT_TRUE(validate_params(kBase).empty());
  Params inf = kBase;
  inf.kappa = Confidence::infinite();
  EXPECT_TRUE(validate_params(inf).empty());
}

TEST(ValidateParams, NamesEachViolatedField) {
  Params p = kBase;
  p.gamma = 0.0;
  auto v = validate_params(p);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].field, "gamma");
  EXPECT_NE(v[0].message.find("gamma must be > 0"), std::string::npos);

  p = Params{-1.0, 0.8, 0.0, NAN, Confidence(0.0)};
  v = validate_params(p);
  EXPECT_TRUE(names(v, "beta"));
  EXPECT_TRUE(names(v, "rho"));
  EXPECT_TRUE(names(v, "omega"));
  EXPECT_TRUE(names(v, "kappa"));
  EXPECT_FALSE(names(v, "gamma"));
}

TEST(ValidateParams, ZeroRhoOnlyInSirsMode) {
  Params p = kBase;
  p.rho = 0.0;
  EXPECT_TRUE(names(validate_params(p), "rho"));
  p.variant = Variant::Sirs;
  EXPECT_TRUE(validate_params(p).empty());
  p.rho = 0.12;
  EXPECT_TRUE(names(validate_params(p), "rho"));
}

TEST(ValidateParams, RejectsNegativeInfiniteKappa) {
  Params p = kBase;
  p.kappa = Confidence(-INFINITY);
  EXPECT_TRUE(names(validate_params(p), "kappa"));
}

TEST(ValidateState, AcceptsOutbreakInitialCondition) {
  EXPECT_TRUE(validate_state(kBase, State{0.54, 0.41, 0.05, 0.0}).empty());
}

TEST(ValidateState, RejectsBadSum) {
  EXPECT_TRUE(names(validate_state(kBase, State{0.5, 0.5, 0.5, 0.5}), "sum"));
}

TEST(ValidateState, RejectsVaccinatedAboveConfidence) {
  Params p = kBase;
  p.kappa = Confidence(0.5);
  const auto v = validate_state(p, State{0.1, 0.1, 0.0, 0.8});
  EXPECT_TRUE(names(v, "V"));
  EXPECT_FALSE(names(v, "sum"));
}

TEST(ValidateState, HonoursTolerance) {
  const State drift{0.2 + 5e-10, 0.0, 0.0, 0.8};
  EXPECT_TRUE(validate_state(kBase, drift).empty());
  EXPECT_FALSE(validate_state(kBase, drift, 1e-12).empty());
  EXPECT_TRUE(names(validate_state(kBase, State{1.0 + 1e-6, -1e-6, 0.0, 0.0}), "I"));
  EXPECT_TRUE(names(validate_state(kBase, State{NAN, 0.0, 0.0, 1.0}), "S"));
}

TEST(ClampToAdmissible, ClampsRoundingButNotRealViolations) {
  Params p = kBase;
  const State nudged{0.2 - 5e-10, 0.0, -1e-12, 0.8 + 5e-10};
  const State clamped = clamp_to_admissible(p, nudged);
  EXPECT_EQ(clamped.v, 0.8);
  EXPECT_EQ(clamped.r, 0.0);
  EXPECT_TRUE(validate_state(p, clamped).empty());
  EXPECT_THROW(clamp_to_admissible(p, State{0.1, 0.0, 0.0, 0.9}), StateError);
}

TEST(Hesitance, ReciprocalOfConfidence) {
  Params p = kBase;
  EXPECT_DOUBLE_EQ(vaccine_hesitance(p).value, 1.25);
  EXPECT_FALSE(vaccine_hesitance(p).limit);
  p.kappa = Confidence(1.0);
  EXPECT_EQ(vaccine_hesitance(p).value, 1.0);
  p.kappa = Confidence::infinite();
  const Hesitance h = vaccine_hesitance(p);
  EXPECT_EQ(h.value, 0.0);
  EXPECT_TRUE(h.limit);
}

TEST(Confidence, EffectiveCap) {
  EXPECT_EQ(Confidence(0.3).effective(), 0.3);
  EXPECT_EQ(Confidence(1.5).effective(), 1.0);
  EXPECT_EQ(Confidence::infinite().effective(), 1.0);
  EXPECT_TRUE(Confidence::infinite().is_infinite());
  EXPECT_FALSE(Confidence(1e300).is_infinite());
}
