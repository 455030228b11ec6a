#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/printers.hpp"
#include "support/random_models.hpp"
#include "vortex/errors.hpp"
#include "vortex/maps.hpp"
#include "vortex/metrics.hpp"
#include "vortex/moduli.hpp"

using namespace vortex;

namespace {

Rational fact(long n) { return Rational(factorial(static_cast<unsigned long>(n))); }

std::vector<SectionData> positive_data(int n, long r = 3) { return std::vector<SectionData>(n, SectionData{r, false}); }

}  // namespace

TEST(Maps, ProjectiveTargetHasOnlyTheOrigin) {
  auto planes = unstable_planes(ToricTarget::projective_space(4, 2));
  ASSERT_EQ(planes.size(), 1U);
  EXPECT_EQ(planes[0].dim, 0);
  EXPECT_TRUE(planes[0].allowed.empty());
}

TEST(Maps, WeightedLineHasOnlyTheOrigin) {
  EXPECT_THROW(ToricTarget(WeightSystem({{1, 2}}), {1}), PreconditionError);
  auto t = ToricTarget::unchecked(WeightSystem({{1, 2}}), {1});
  auto planes = unstable_planes(t);
  ASSERT_EQ(planes.size(), 1U);
  EXPECT_EQ(planes[0].dim, 0);
}

TEST(Maps, ProductOfLinesHasTwoAxes) {
  ToricTarget t(WeightSystem({{1, 0}, {0, 1}}), {1, 1});
  auto planes = unstable_planes(t);
  ASSERT_EQ(planes.size(), 2U);
  EXPECT_EQ(planes[0].allowed, IndexSet::of({0}));
  EXPECT_EQ(planes[1].allowed, IndexSet::of({1}));
  EXPECT_EQ(planes[0].dim, 1);
}

TEST(Maps, TargetValidation) {
  EXPECT_THROW(ToricTarget(WeightSystem({{1, 1}}), {0}), PreconditionError);
  EXPECT_THROW(ToricTarget(WeightSystem({{1, 1}}), {1, 2}), PreconditionError);
  EXPECT_THROW(ToricTarget(WeightSystem({{2, 2}}), {1}), PreconditionError);
  EXPECT_TRUE(ToricTarget::projective_space(3).is_projective_space());
}

TEST(Maps, SInvariantExamples) {
  auto cp = ToricTarget::projective_space(3);
  EXPECT_EQ(s_invariant(cp, positive_data(3)), 0);
  auto with_trivial = positive_data(3);
  with_trivial[1] = SectionData{1, true};
  EXPECT_EQ(s_invariant(cp, with_trivial), std::nullopt);

  ToricTarget t(WeightSystem({{1, 0}, {0, 1}}), {1, 1});
  // Plane {2} forces z_1 = 0 and L_1 has no sections.
  EXPECT_EQ(s_invariant(t, {SectionData{0, false}, SectionData{2, false}}), 2);
  EXPECT_EQ(s_invariant(t, positive_data(2)), 1);
  EXPECT_THROW(s_invariant(t, positive_data(3)), PreconditionError);
}

TEST(Maps, SectionDataFromBase) {
  ToricTarget t(WeightSystem({{1, 0, 1}, {0, 1, 1}}), {1, 2});
  auto data = section_data(t, ProjectiveSpace{1}, {Degree{2}, Degree{0}});
  ASSERT_EQ(data.size(), 3U);
  EXPECT_EQ(data[0].r, 3);
  EXPECT_TRUE(data[1].trivial);
  EXPECT_EQ(data[2].r, 3);
}

TEST(Maps, EmbeddingExamples) {
  EXPECT_TRUE(embedding_open_dense(ToricTarget::projective_space(3), ProjectiveSpace{2}, positive_data(3)));
  EXPECT_FALSE(embedding_open_dense(ToricTarget::projective_space(2), ProjectiveSpace{2}, positive_data(2)));
  EXPECT_THROW(embedding_open_dense(ToricTarget::projective_space(2), Hirzebruch{1, 2, 1}, positive_data(2)),
               UnsupportedError);
}

TEST(Maps, ConjecturalVolumeExamples) {
  EXPECT_EQ(maps_volume_conjectural(ToricTarget::projective_space(2), ProjectiveSpace{1}, 1, 1), PiPoly::pi().pow(3) / 6);
  EXPECT_THROW(maps_volume_conjectural(ToricTarget::projective_space(2), ProjectiveSpace{2}, 1, 1), NotOpenDense);
  // Constant maps: the target volume.
  for (int n = 2; n <= 4; ++n) {
    const PiPoly v = maps_volume_conjectural(ToricTarget::projective_space(n), ProjectiveSpace{1, 2}, 0, 3);
    EXPECT_EQ(v, (PiPoly::pi() * Rational(6)).pow(static_cast<unsigned>(n - 1)) / fact(n - 1));
  }
  EXPECT_THROW(maps_volume_conjectural(ToricTarget::projective_space(2), ProjectiveSpace{1}, -1, 1), PreconditionError);
}

TEST(MapsProperty, UnionOfPlanesIsTheUnstableLocus) {
  gen::Rng rng(5150);
  int tried = 0;
  for (int trial = 0; trial < 300 && tried < 40; ++trial) {
    const int k = rng.uniform(1, 2);
    const int n = rng.uniform(k + 1, 8);
    const auto mat = gen::random_effective_matrix(rng, k, n, 0, 2);
    const WeightSystem ws(mat);
    if (!check_c2(ws)) continue;
    std::vector<Rational> tau;
    for (int a = 0; a < k; ++a) tau.emplace_back(rng.uniform(1, 5));
    SigmaVector tv(tau.begin(), tau.end());
    if (!check_c1(ws, tv)) continue;
    ToricTarget t(ws, tau);
    ++tried;
    const auto planes = unstable_planes(t);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      const bool unstable = s == 0 || !oracle::in_cone_interior(mat, s, tv);
      bool covered = false;
      for (const auto& p : planes) covered = covered || (s & ~p.allowed.bits()) == 0;
      EXPECT_EQ(unstable, covered) << "trial " << trial << " support " << s;
    }
    for (const auto& a : planes) {
      for (const auto& b : planes) {
        if (&a != &b) EXPECT_NE(a.allowed.bits() & ~b.allowed.bits(), 0U);
      }
    }
  }
  EXPECT_GE(tried, 20);
}

TEST(MapsProperty, ProjectiveFamilyFollowsNGreaterThanM) {
  for (int n = 2; n <= 6; ++n) {
    const auto t = ToricTarget::projective_space(n);
    for (int m = 1; m <= 5; ++m) {
      const ProjectiveSpace man{m};
      for (long d = 1; d <= 2; ++d) {
        const auto data = section_data(t, man, {Degree{d}});
        EXPECT_EQ(s_invariant(t, man, data), 0);
        EXPECT_EQ(embedding_open_dense(t, man, data), n > m) << "n=" << n << " m=" << m;
      }
    }
  }
}

TEST(MapsProperty, DimensionMatchesVortexModuli) {
  for (int m = 1; m <= 2; ++m) {
    for (int n = m + 1; n <= 4; ++n) {
      for (long d = 0; d <= 2; ++d) {
        const long r = r_sections(ProjectiveSpace{m}, Degree{d});
        auto model = line_bundle_model(ProjectiveSpace{m}, Degree{d}, 1, 1000000, n);
        auto desc = build_moduli(model);
        ASSERT_EQ(desc.kind, ModuliKind::ProjectiveSpace);
        EXPECT_EQ(desc.complex_dimension, n * r - 1);
        const PiPoly v = maps_volume_conjectural(ToricTarget::projective_space(n), ProjectiveSpace{m}, d, 1);
        EXPECT_EQ(v, limit_volume(model));
      }
    }
  }
}
