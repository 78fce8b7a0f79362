#include <gtest/gtest.h>

#include "mapgerm/commands.hpp"
#include "mapgerm/family.hpp"

using namespace mapgerm;

TEST(Family, RandomHomogeneousShape) {
  const Poly linear = random_homogeneous(1, 1, 3);
  ASSERT_EQ(linear.size(), 1u);
  EXPECT_EQ(linear.degree(), 1u);

  const Poly quintic = random_homogeneous(5, 3, 99);
  EXPECT_EQ(quintic.size(), 21u);
  EXPECT_TRUE(quintic.is_homogeneous());
  for (const auto& [m, c] : quintic.terms()) {
    EXPECT_EQ(m.degree(), 5u);
    EXPECT_NE(sgn(c), 0);
    EXPECT_LE(abs(c), 9);
    EXPECT_EQ(c.get_den(), 1);
  }
  EXPECT_THROW(random_homogeneous(0, 2, 1), std::invalid_argument);
}

TEST(Family, DeterministicFromSeed) {
  EXPECT_EQ(random_homogeneous(6, 3, 1234), random_homogeneous(6, 3, 1234));
  EXPECT_NE(random_homogeneous(6, 3, 1234), random_homogeneous(6, 3, 1235));
  EXPECT_NE(sample_seed(1, 5, 0), sample_seed(1, 5, 1));
  EXPECT_NE(sample_seed(1, 5, 0), sample_seed(1, 6, 0));
}

TEST(Family, CoefficientsCoverBothSigns) {
  int negative = 0, positive = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poly phi = random_homogeneous(4, 2, seed);
    for (const auto& [m, c] : phi.terms()) (sgn(c) < 0 ? negative : positive)++;
  }
  EXPECT_GT(negative, 10);
  EXPECT_GT(positive, 10);
}

TEST(Family, SampleReport) {
  const FamilySample s = build_fp(5, 2024);
  EXPECT_TRUE(s.phi.is_homogeneous());
  EXPECT_EQ(s.phi.degree(), 5u);
  EXPECT_EQ(s.germ.component(2), Poly::variable(3, 2) * Poly::variable(3, 2) * Poly::variable(3, 2) *
                                         Poly::variable(3, 2) +
                                     s.phi);
  EXPECT_EQ(s.report.multiplicity.value, 4u);
  ASSERT_TRUE(s.report.opsu);
  EXPECT_EQ(s.report.opsu->admits, OpsuAnswer::no);
  EXPECT_GE(*s.report.nf_dimension, 2u);
  EXPECT_TRUE(s.passes_screens());
  EXPECT_THROW(build_fp(4, 1), std::invalid_argument);
}

TEST(Family, ScanIsDeterministicAndOrdered) {
  FamilyOptions quick;
  quick.with_ae = false;
  const ScanReport a = scan({5, 6}, 3, 77, quick);
  const ScanReport b = scan({5, 6}, 3, 77, quick);
  ASSERT_EQ(a.rows.size(), 6u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].p, i < 3 ? 5u : 6u);
    EXPECT_EQ(a.rows[i].phi, b.rows[i].phi);
    EXPECT_EQ(a.rows[i].report.ke_codim.value, b.rows[i].report.ke_codim.value);
  }
  EXPECT_TRUE(scan({}, 3, 1).rows.empty());
  EXPECT_THROW(scan({4}, 1, 1), std::invalid_argument);
}

TEST(Family, ReportsAreByteIdentical) {
  RunConfig config;
  config.p_values = {5};
  config.samples = 2;
  config.seed = 9;
  const std::string a = render(run_command("family-scan", "", config), OutputFormat::json);
  const std::string b = render(run_command("family-scan", "", config), OutputFormat::json);
  EXPECT_EQ(a, b);
}
