#include <gtest/gtest.h>

#include "mapgerm/invariants.hpp"
#include "mapgerm/marar_tari.hpp"
#include "support.hpp"

using namespace mapgerm;
using namespace testing_support;

namespace {

const std::vector<std::string> kXY{"x", "y"};

PQPair pq(const std::string& p, const std::string& q) { return {poly(p, kXY), poly(q, kXY)}; }

PQPair swapped(const PQPair& in) {
  const std::vector<Poly> swap{Poly::variable(2, 1), Poly::variable(2, 0)};
  return {in.P.substitute(swap), in.Q.substitute(swap)};
}

}  // namespace

TEST(MararTari, ExtractsPQFromPreform) {
  const PQPair a = extract_pq(germ(kMararTari));
  EXPECT_EQ(a.P, poly("x^2 - y^2", kXY));
  EXPECT_EQ(a.Q, poly("y^2", kXY));
  const PQPair b = extract_pq(germ("(x, y, z^4 + x*z)"));
  EXPECT_EQ(b.P, poly("x", kXY));
  EXPECT_TRUE(b.Q.is_zero());
}

TEST(MararTari, RejectsGermsOutsideThePreform) {
  EXPECT_THROW(extract_pq(germ("(x, y, z^4 + z^3)")), std::invalid_argument);
  EXPECT_THROW(extract_pq(germ("(x, y, 2*z^4 + x*z)")), std::invalid_argument);
  EXPECT_THROW(extract_pq(germ("(x, y, z^4 + x*z + z^5)")), std::invalid_argument);
  EXPECT_THROW(extract_pq(germ("(x, y, z^4 + x)")), std::invalid_argument);
  EXPECT_THROW(extract_pq(germ("(y, x, z^4 + x*z)", {"x", "y", "z"})), std::invalid_argument);
  EXPECT_THROW(extract_pq(germ("(x, y^4 + x*y)")), std::invalid_argument);
}

TEST(MararTari, GeneratorSetIsAssembledExactly) {
  const GeneratorSet g = generator_set(pq("x^2 - y^2", "y^2"));
  EXPECT_EQ(g[0].to_string(kXY), "(3*x^2-3*y^2, 2*y^2)");
  EXPECT_EQ(g[1].to_string(kXY), "(2*x, 0)");
  EXPECT_EQ(g[2].to_string(kXY), "(-2*y, 2*y)");

  const GeneratorSet zero = generator_set(pq("0", "0"));
  for (const auto& v : zero) EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(generator_set(pq("x", "y"))[0].to_string(kXY), "(3*x, 2*y)");
}

TEST(MararTari, FourthGeneratorIdentity) {
  RandomPolys gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    const PQPair v{gen.poly(2, 1, 3, 3), gen.poly(2, 1, 3, 3)};
    const GeneratorSet g = generator_set(v);
    const GermVector expected(2, {Rational(-7) * v.P * v.Q * v.Q, Rational(9) * v.P * v.P - Rational(2) * v.Q * v.Q * v.Q});
    EXPECT_EQ(g[3], expected);
  }
}

TEST(MararTari, CrossValidatesAgainstAeOnPreforms) {
  std::vector<std::pair<std::string, PQPair>> cases;
  for (unsigned k = 1; k <= 3; ++k) {
    cases.emplace_back("4_1^" + std::to_string(k), pq_4_1(k));
    cases.emplace_back("4_2^" + std::to_string(k), pq_4_2(k));
  }
  cases.emplace_back("reference", pq_reference_example());
  for (const auto& [name, v] : cases) {
    const CodimReport ae = ae_codim(preform_germ(v));
    ASSERT_NE(ae.status, CertStatus::inconclusive) << name;
    for (GenerationRule rule : {GenerationRule::all_module, GenerationRule::mixed}) {
      const CodimReport ge = ge_codim(v, rule);
      EXPECT_EQ(ge.status, CertStatus::certified) << name;
      EXPECT_EQ(ge.value, ae.value) << name << " " << to_string(rule);
    }
  }
}

TEST(MararTari, KnownPreformValues) {
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_EQ(ge_codim(pq_4_1(k)).value, k - 1);
    EXPECT_EQ(ge_codim(pq_4_2(k)).value, k);
  }
}

TEST(MararTari, InvariantUnderSwappingVariables) {
  for (const PQPair& v : {pq_reference_example(), pq_4_1(2), pq_4_2(3), pq("x^2 + y^3", "x*y")}) {
    EXPECT_EQ(ge_codim(v).value, ge_codim(swapped(v)).value);
    EXPECT_EQ(ge_codim(v).status, ge_codim(swapped(v)).status);
  }
}

TEST(MararTari, ZeroModuleIsInconclusive) {
  EXPECT_EQ(ge_codim(pq("0", "0"), GenerationRule::all_module, {8, 3}).status, CertStatus::inconclusive);
}

TEST(MararTari, CalibrationIsRecorded) {
  const Calibration& cal = calibration();
  ASSERT_EQ(cal.entries.size(), 2u);
  EXPECT_EQ(cal.target_value, 4u);
  for (const auto& e : cal.entries) EXPECT_TRUE(e.cross_validates) << to_string(e.rule);
  EXPECT_TRUE(cal.chosen == GenerationRule::all_module || cal.chosen == GenerationRule::mixed);
  EXPECT_EQ(parse_generation_rule("mixed"), GenerationRule::mixed);
  EXPECT_THROW(parse_generation_rule("ring"), std::invalid_argument);
}
