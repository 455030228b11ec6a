#include <gtest/gtest.h>

#include <cmath>

#include "support/printers.hpp"
#include "vortex/errors.hpp"
#include "vortex/fourier_mukai.hpp"
#include "vortex/metrics.hpp"

using namespace vortex;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }
PiPoly pi() { return PiPoly::pi(); }
Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

RingElement theta(const PresentationPtr& p) { return RingElement::product(p, {dual_generator(1), dual_generator(2)}); }

// pi Vol(M) (pi sigma)^R / R! [n tau sigma + 4 pi^2 R / e^4], the abelian-surface
// volume multiplied by sigma.
PiPoly abelian_surface_closed_form_times_sigma(const GlsmModel& model, const PiPoly& sigma, long rank, int copies) {
  const Rational vol = volume(model.manifold);
  const PiPoly bracket = sigma * (Rational(copies) * model.tau[0]) + PiPoly::monomial(4 * rank * model.inv_e2 * model.inv_e2, 2);
  return pi() * vol * (pi() * sigma).pow(static_cast<unsigned>(rank)) * bracket / fact(rank);
}

}  // namespace

TEST(Metrics, EnergyExamples) {
  for (long d = 0; d <= 3; ++d) {
    auto model = line_bundle_model(ProjectiveSpace{1, 1}, Degree{d}, 7, 3);
    EXPECT_EQ(vortex_energy(model), PiPoly::monomial(2 * 7 * d, 1));
  }
  // F_1, omega = 3F + C, L = 2C + 5F.
  auto hz = line_bundle_model(Hirzebruch{1, 3, 1}, Bidegree{2, 5}, 4, 2);
  const Rational c1w = 2 * 3 + 5 - 2;  // a lambda + b delta - a k delta
  const Rational c1sq = 2 * 2 * 5 - 4;  // 2ab - k a^2
  EXPECT_EQ(vortex_energy(hz), PiPoly::monomial(2 * 4 * c1w, 1) - PiPoly::monomial(2 * c1sq / 2, 2));
  auto zero_tau = line_bundle_model(Hirzebruch{1, 3, 1}, Bidegree{2, 5}, 0, 2);
  EXPECT_EQ(vortex_energy(zero_tau), PiPoly::monomial(-c1sq, 2));
  // CP^3 with lambda = 2: int c1 omega^2 = 4d, int c1^2 omega = 2d^2.
  auto cp3 = line_bundle_model(ProjectiveSpace{3, 2}, Degree{3}, 5, 1);
  EXPECT_EQ(vortex_energy(cp3), PiPoly::monomial(2 * 5 * 12 / 2, 1) - PiPoly::monomial(2 * 18, 2));
}

TEST(Metrics, KahlerClassSimplyConnected) {
  auto model = line_bundle_model(ProjectiveSpace{2, 1}, Degree{2}, 60, 2);
  auto k = kahler_class(model);
  ASSERT_EQ(k.eta_coefficients.size(), 1U);
  EXPECT_EQ(k.eta_coefficients[0], pi() * model_sigma(model)[0]);
  EXPECT_TRUE(k.base_correction.empty());
}

TEST(Metrics, EllipticCurveKahlerClass) {
  for (long d = 1; d <= 3; ++d) {
    auto model = line_bundle_model(AbelianVariety{1, {q(3, 2)}}, Deltas{{d}}, 40, 2);
    auto k = kahler_class(model);
    ASSERT_EQ(k.base_correction.size(), 1U);
    const auto& corr = k.base_correction[0];
    EXPECT_EQ(corr, theta(corr.presentation()) * PiPoly::monomial(2 * model.inv_e2, 2));
    EXPECT_EQ(k.eta_coefficients[0], pi() * model_sigma(model)[0]);
    EXPECT_EQ(kahler_class_pipeline(model), k);
  }
}

TEST(Metrics, AbelianSurfaceKahlerClass) {
  auto model = line_bundle_model(AbelianVariety{2, {2, 5}}, Deltas{{1, 2}}, 100, 1);
  auto k = kahler_class(model);
  const auto& corr = k.base_correction[0];
  auto p = corr.presentation();
  auto b13 = RingElement::product(p, {dual_generator(1), dual_generator(3)});
  auto b24 = RingElement::product(p, {dual_generator(2), dual_generator(4)});
  EXPECT_EQ(corr, (b13 * PiPoly(5) + b24 * PiPoly(2)) * PiPoly::monomial(2, 2));
}

TEST(Metrics, KahlerClassRequiresStability) {
  auto model = line_bundle_model(ProjectiveSpace{1, 1}, Degree{1}, 2, 1);
  EXPECT_THROW(kahler_class(model), NotStable);
  EXPECT_THROW(volume_moduli(model), NotStable);
}

TEST(Metrics, ProjectiveSpaceVolumeExample) {
  auto model = line_bundle_model(ProjectiveSpace{2, 1}, Degree{1}, 60, 2);
  const auto sigma = model_sigma(model)[0];
  EXPECT_EQ(volume_moduli(model), (pi() * sigma).pow(2) / 2);
}

TEST(Metrics, ScalarCurvatureExamples) {
  auto r2 = line_bundle_model(ProjectiveSpace{1, 1}, Degree{1}, 60, 2);
  EXPECT_EQ(total_scalar_curvature(r2), PiPoly::monomial(4, 1));
  auto r3 = line_bundle_model(ProjectiveSpace{1, 1}, Degree{2}, 60, 2);
  const auto sigma = model_sigma(r3)[0];
  EXPECT_EQ(total_scalar_curvature(r3), pi() * pi() * sigma * Rational(6));
  EXPECT_THROW(scalar_curvature_power_form(1, 1.0), PreconditionError);
  auto pic = line_bundle_model(AbelianVariety{1, {1}}, Deltas{{2}}, 60, 2);
  EXPECT_THROW(total_scalar_curvature(pic), UnsupportedKind);
}

TEST(Metrics, ConstrainedVolumeExamples) {
  const PiPoly sigma = PiPoly(30) - pi();
  EXPECT_EQ(constrained_volume(2, 2, 1, 2, sigma), pi() * sigma);
  const long r = r_sections(ProjectiveSpace{1}, Degree{2});
  const long r_l = r_sections(ProjectiveSpace{1}, Degree{4});
  ASSERT_EQ(r, 3);
  ASSERT_EQ(r_l, 5);
  EXPECT_EQ(constrained_volume(3, r, 2, r_l, sigma), (pi() * sigma).pow(3) * Rational(32, 6));
  // l = 1 contributes no multiplier.
  EXPECT_EQ(constrained_volume(3, 3, 1, 4, sigma), (pi() * sigma).pow(4) / 24);
  EXPECT_THROW(constrained_volume(1, 2, 1, 3, sigma), PreconditionError);
}

TEST(Metrics, LimitExamples) {
  auto model = line_bundle_model(ProjectiveSpace{1, 1}, Degree{2}, 3, 5, 3);
  const Rational vol = 1;
  EXPECT_EQ(limit_volume(model), (pi() * Rational(3 * vol)).pow(8) / fact(8));
  EXPECT_EQ(limit_energy(line_bundle_model(ProjectiveSpace{1, 1}, Degree{2}, 3, 5)), PiPoly::monomial(12, 1));

  auto ab = line_bundle_model(AbelianVariety{2, {1, 2}}, Deltas{{2, 1}}, 10, 1);
  auto k = limit_kahler_class(ab);
  EXPECT_TRUE(k.base_correction[0].is_zero());
  EXPECT_EQ(k.eta_coefficients[0], pi() * Rational(10 * 2));
}

TEST(Metrics, UnsupportedKinds) {
  GlsmModel orbifold{ProjectiveSpace{1, 1}, WeightSystem({{1, 2}}), {100}, 1, {Degree{1}}, {}};
  EXPECT_THROW(volume_moduli(orbifold), UnsupportedKind);
  auto point = line_bundle_model(ProjectiveSpace{2, 1}, Degree{0}, 0, 1);
  EXPECT_THROW(volume_moduli(point), UnsupportedKind);
  auto pic = line_bundle_model(AbelianVariety{2, {1, 1}}, Deltas{{0, 0}}, 0, 1);
  EXPECT_THROW(volume_moduli(pic), UnsupportedKind);
}

TEST(MetricsProperty, KahlerPipelineMatchesDirect) {
  for (int m = 1; m <= 3; ++m) {
    for (long d = 1; d <= 3; ++d) {
      auto model = line_bundle_model(ProjectiveSpace{m, q(3, 2)}, Degree{d}, 90, 3);
      EXPECT_EQ(kahler_class_pipeline(model), kahler_class(model)) << "m=" << m << " d=" << d;
    }
  }
  auto hz = line_bundle_model(Hirzebruch{1, 3, 1}, Bidegree{1, 2}, 90, 3);
  EXPECT_EQ(kahler_class_pipeline(hz), kahler_class(hz));
  for (long d1 = 1; d1 <= 2; ++d1) {
    for (long d2 = 1; d2 <= 3; ++d2) {
      auto model = line_bundle_model(AbelianVariety{2, {1, 3}}, Deltas{{d1, d2}}, 200, 2);
      EXPECT_EQ(kahler_class_pipeline(model), kahler_class(model)) << d1 << "," << d2;
    }
  }
}

TEST(MetricsProperty, KahlerPipelineWithSeveralFactors) {
  GlsmModel model{ProjectiveSpace{2, 1}, WeightSystem({{1, 0, 1}, {0, 1, 1}}), {90, 70}, q(1, 2), {Degree{1}, Degree{2}}, {}};
  EXPECT_EQ(kahler_class_pipeline(model), kahler_class(model));
}

TEST(MetricsProperty, AbelianSurfaceClosedForm) {
  for (long d1 = 1; d1 <= 3; ++d1) {
    for (long d2 = 1; d2 <= 3; ++d2) {
      for (long l1 = 1; l1 <= 2; ++l1) {
        for (long l2 = 1; l2 <= 2; ++l2) {
          for (auto [tau, e2] : {std::pair<long, long>{100, 1}, {10, 4}}) {
            auto model = line_bundle_model(AbelianVariety{2, {l1, l2}}, Deltas{{d1, d2}}, tau, e2);
            const auto sigma = model_sigma(model)[0];
            if (sigma.sign() != Sign::Positive) continue;
            const PiPoly lhs = volume_moduli(model) * sigma;
            EXPECT_EQ(lhs, abelian_surface_closed_form_times_sigma(model, sigma, d1 * d2, 1))
                << d1 << "," << d2 << " lambda " << l1 << "," << l2 << " tau " << tau;
          }
        }
      }
    }
  }
}

TEST(MetricsProperty, AbelianSurfaceSeveralSections) {
  for (int n = 2; n <= 3; ++n) {
    auto model = line_bundle_model(AbelianVariety{2, {1, 2}}, Deltas{{1, 2}}, 300, 2, n);
    const auto sigma = model_sigma(model)[0];
    ASSERT_EQ(sigma.sign(), Sign::Positive);
    EXPECT_EQ(volume_moduli(model) * sigma, abelian_surface_closed_form_times_sigma(model, sigma, 2 * n, n));
  }
}

TEST(MetricsProperty, RelationRingMatchesSegre) {
  for (int m = 1; m <= 2; ++m) {
    for (long d = 1; d <= 3; ++d) {
      std::vector<long> deltas(m, d);
      deltas[0] = 1;
      std::vector<Rational> lambdas(m, q(3, 2));
      auto model = line_bundle_model(AbelianVariety{m, lambdas}, Deltas{deltas}, 300, 2);
      EXPECT_EQ(volume_moduli_relation_ring(model), volume_moduli(model)) << "m=" << m << " d=" << d;
    }
  }
}

TEST(MetricsProperty, EllipticCurveVolume) {
  for (long d = 1; d <= 4; ++d) {
    auto model = line_bundle_model(AbelianVariety{1, {1}}, Deltas{{d}}, 50, 1);
    const auto v = volume_moduli(model);
    EXPECT_EQ(v, volume_moduli_relation_ring(model));
    EXPECT_EQ(v.sign(), Sign::Positive);
  }
}

TEST(MetricsProperty, ProjectiveSpaceVolumeAndCurvature) {
  for (long r = 2; r <= 6; ++r) {
    for (long tau : {40L, 55L, 70L, 85L, 100L}) {
      // O(1) on CP^(r-1) has r sections.
      auto model = line_bundle_model(ProjectiveSpace{static_cast<int>(r - 1), 1}, Degree{1}, tau, 7);
      const auto sigma = model_sigma(model)[0];
      ASSERT_EQ(sigma.sign(), Sign::Positive);
      EXPECT_EQ(volume_moduli(model), (pi() * sigma).pow(static_cast<unsigned>(r - 1)) / fact(r - 1));
      const double exact = total_scalar_curvature(model).to_double();
      const double alt = scalar_curvature_power_form(static_cast<int>(r), volume_moduli(model).to_double());
      EXPECT_NEAR(exact / alt, 1.0, 1e-9);
    }
  }
}

TEST(MetricsProperty, LimitsCommuteWithSubstitution) {
  for (int m = 1; m <= 3; ++m) {
    for (long d = 0; d <= 2; ++d) {
      for (int n = 1; n <= 3; ++n) {
        auto model = line_bundle_model(ProjectiveSpace{m, q(1, 2)}, Degree{d}, 5, 2, n);
        if (d == 0 && n == 1) continue;  // a point
        const long r = r_sections(model.manifold, Degree{d});
        const PiPoly base = pi() * (Rational(5) * volume(model.manifold));
        EXPECT_EQ(limit_volume(model), base.pow(static_cast<unsigned>(n * r - 1)) / fact(n * r - 1));
      }
    }
  }
  for (long d = 1; d <= 3; ++d) {
    auto model = line_bundle_model(Hirzebruch{2, 3, 1}, Bidegree{1, d}, 5, 2);
    const auto in = intersection_numbers(model.manifold, Bidegree{1, d});
    EXPECT_EQ(limit_energy(model), PiPoly::monomial(2 * 5 * in.c1_omega, 1));
  }
  auto ab = line_bundle_model(AbelianVariety{2, {1, 1}}, Deltas{{1, 2}}, 5, 2);
  const auto s = strong_coupling(ab);
  EXPECT_EQ(model_sigma(s)[0], PiPoly(5));
  EXPECT_EQ(limit_volume(ab), volume_moduli(s));
}

TEST(MetricsProperty, VolumeIncreasesWithTau) {
  std::vector<GlsmModel> models = {
      line_bundle_model(ProjectiveSpace{1, 1}, Degree{3}, 0, 1),
      line_bundle_model(AbelianVariety{2, {1, 2}}, Deltas{{2, 1}}, 0, 1),
      line_bundle_model(AbelianVariety{1, {1}}, Deltas{{3}}, 0, 2, 2),
  };
  for (auto model : models) {
    double prev = 0;
    for (long tau = 40; tau <= 120; tau += 20) {
      model.tau[0] = tau;
      const double v = volume_moduli(model).to_double();
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}
