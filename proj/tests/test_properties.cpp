#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace {

void expect_ok(const props::Result& r) {
  EXPECT_GT(r.trials, 0) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

}  // namespace

TEST(Properties, NullMonotonicity) { expect_ok(props::null_monotonicity(1001)); }

TEST(Properties, TransformsPreserveLorentzian) { expect_ok(props::transforms_preserve_lorentzian(1002)); }

TEST(Properties, DegenerateBinomials) {
  long used = 0;
  expect_ok(props::degenerate_binomials(1003, 200, &used));
  EXPECT_GT(used, 20);
}

TEST(Properties, RepresentationStarShape) { expect_ok(props::representation_star_shape(1004)); }

TEST(Properties, MConvexityCriteria) { expect_ok(props::m_convexity_criteria(1005)); }

TEST(Properties, EulerPoincare) { expect_ok(props::euler_poincare(1006)); }

TEST(Properties, InertiaAgreement) { expect_ok(props::inertia_agreement(1007)); }

TEST(Properties, GaugeRoundTrip) { expect_ok(props::gauge_round_trip(1008)); }

TEST(Properties, GaugeBoundary) { expect_ok(props::gauge_boundary(1009)); }
