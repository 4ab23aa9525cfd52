#include <gtest/gtest.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "criteria.hpp"
#include "lopq/classical.hpp"
#include "lopq/errors.hpp"
#include "lopq/families.hpp"
#include "lopq/lattice.hpp"

namespace lopq {
namespace {

nlohmann::json golden() {
  std::ifstream in(std::string(LOPQ_GOLDEN_DIR) + "/family_golden.json");
  return nlohmann::json::parse(in);
}

Scalar param(const nlohmann::json& case_, const char* key) {
  return parse_scalar(case_.at("params").at(key).get<std::string>());
}

FamilyBundle bundle_for(const nlohmann::json& c) {
  if (c.at("family") == "racah") {
    return racah_bundle({param(c, "a"), param(c, "b"), param(c, "c"), param(c, "d")});
  }
  return aw_bundle({param(c, "a"), param(c, "b"), param(c, "c"), param(c, "d"), param(c, "p"),
                    param(c, "r"), param(c, "c3")});
}

std::vector<std::string> strings(const Poly& p, std::size_t len) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(to_string(p.coeff(i)));
  return out;
}

TEST(Families, PairsMatchSymbolicExpansion) {
  const nlohmann::json cases = golden();
  ASSERT_GE(cases.size(), 4u);
  for (const auto& c : cases) {
    const FamilyBundle fam = bundle_for(c);
    EXPECT_EQ(strings(fam.pair.phi(), 3), c.at("phi").get<std::vector<std::string>>()) << c.dump();
    EXPECT_EQ(strings(fam.pair.psi(), 2), c.at("psi").get<std::vector<std::string>>()) << c.dump();
  }
}

TEST(Families, ClosedFormsMatchSymbolicEvaluation) {
  for (const auto& c : golden()) {
    const FamilyBundle fam = bundle_for(c);
    const auto cs = c.at("C").get<std::vector<std::string>>();
    for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(to_string(fam.closed_c(i + 1)), cs[i]) << c.dump();
    if (c.contains("B")) {
      const auto bs = c.at("B").get<std::vector<std::string>>();
      for (std::size_t i = 0; i < bs.size(); ++i) EXPECT_EQ(to_string(fam.closed_b(i)), bs[i]) << c.dump();
    }
  }
}

TEST(Families, RacahExamples) {
  const RacahParams p{make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 4), make_scalar(1, 5)};
  const FamilyBundle fam = racah_bundle(p);
  EXPECT_EQ(fam.name, "racah");
  EXPECT_EQ(fam.lattice, Lattice::quadratic(1, p.a + p.b + 1, 0));
  EXPECT_EQ(fam.pair.d, 2 * (p.d + p.c + 2));
  EXPECT_EQ(fam.closed_b(0), -(p.a + 1) * (p.d + 1) * (p.b + p.c + 1) / (p.d + p.c + 2));
  EXPECT_THROW(fam.closed_c(0), std::domain_error);
}

TEST(Families, AskeyWilsonExamples) {
  const AWParams p{make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 5), make_scalar(1, 7),
                   make_scalar(1, 2), 3, 2};
  const FamilyBundle fam = aw_bundle(p);
  EXPECT_EQ(fam.lattice, Lattice::q_lattice(p.p, p.c3, 9));
  EXPECT_THROW(aw_bundle({1, 1, 1, 1, 1}), LatticeError);
  AWParams zero = p;
  zero.a = 0;
  const FamilyBundle z = aw_bundle(zero);
  EXPECT_THROW(z.closed_b(1), std::domain_error);
  EXPECT_NO_THROW(ttrr_coeffs(z.lattice, z.pair, 4));
}

// B_n - c3 scales as r, C_n as r^2, on both the theorem and the closed-form side.
TEST(Families, AskeyWilsonScaling) {
  AWParams p{make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 5), make_scalar(1, 7), make_scalar(1, 2)};
  const FamilyBundle base = aw_bundle(p);
  p.r = 3;
  p.c3 = make_scalar(-5, 2);
  const FamilyBundle scaled = aw_bundle(p);
  const TTRRCoeffs t0 = ttrr_coeffs(base.lattice, base.pair, 8);
  const TTRRCoeffs t1 = ttrr_coeffs(scaled.lattice, scaled.pair, 8);
  for (std::size_t n = 0; n < 8; ++n) {
    EXPECT_EQ(t1.B[n] - p.c3, p.r * t0.B[n]);
    EXPECT_EQ(scaled.closed_b(n), t1.B[n]);
    if (n >= 1) {
      EXPECT_EQ(t1.c_at(n), p.r * p.r * t0.c_at(n));
      EXPECT_EQ(scaled.closed_c(n), t1.c_at(n));
    }
  }
}

TEST(Families, AskeyWilsonRegularityProduct) {
  const FamilyBundle fam = testing::aw_ab_q2();
  const AWParams p{4, 4, make_scalar(1, 3), make_scalar(1, 5), make_scalar(1, 2)};
  EXPECT_TRUE(is_zero(aw_regularity_product(p, 2)));
  EXPECT_FALSE(is_zero(aw_regularity_product(p, 1)));
  const RegularityReport r = regularity(fam.lattice, fam.pair, 4);
  EXPECT_EQ(r.first_failure, (Failure{2, FailureKind::kPhiKRoot}));
}

TEST(Families, NegativeInteger) {
  EXPECT_TRUE(is_negative_integer(Scalar(-1)));
  EXPECT_TRUE(is_negative_integer(Scalar(-7)));
  EXPECT_FALSE(is_negative_integer(Scalar(0)));
  EXPECT_FALSE(is_negative_integer(make_scalar(-1, 2)));
  EXPECT_FALSE(is_negative_integer(Scalar(3)));
}

// d + c = 0 and d + c = -1 are regular; the set excludes d + c + 1 in Z^-.
TEST(Families, RacahRegularitySetEdge) {
  for (const RacahParams& p : {RacahParams{make_scalar(1, 2), make_scalar(1, 3), make_scalar(1, 4), make_scalar(-1, 4)},
                               RacahParams{make_scalar(1, 2), make_scalar(1, 3), make_scalar(-1, 4), make_scalar(-3, 4)}}) {
    const FamilyBundle fam = racah_bundle(p);
    EXPECT_TRUE(racah_regular(p));
    EXPECT_TRUE(regularity(fam.lattice, fam.pair, 10).regular());
    const MomentSeq u = pearson_moments(fam.lattice, fam.pair, 16);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_FALSE(is_zero(hankel(u, n))) << n;
  }
  const RacahParams bad{make_scalar(1, 2), make_scalar(1, 3), make_scalar(-1, 4), make_scalar(-7, 4)};
  EXPECT_FALSE(racah_regular(bad));
  const FamilyBundle fam = racah_bundle(bad);
  EXPECT_EQ(regularity(fam.lattice, fam.pair, 4).first_failure, (Failure{0, FailureKind::kDnZero}));
}

// The set verdict agrees with the scan on a grid of small parameters.
TEST(Families, RacahRegularitySetMatchesScan) {
  const std::vector<Scalar> values = {-3, -2, -1, make_scalar(-1, 2), 0, make_scalar(1, 3), 1, 2};
  int mismatches = 0;
  int total = 0;
  for (const Scalar& a : values) {
    for (const Scalar& b : values) {
      for (const Scalar& c : values) {
        for (const Scalar& d : values) {
          const RacahParams p{a, b, c, d};
          const FamilyBundle fam = racah_bundle(p);
          const bool scan = regularity(fam.lattice, fam.pair, 14).regular();
          ++total;
          if (scan != racah_regular(p)) {
            ++mismatches;
            ADD_FAILURE() << "a=" << a << " b=" << b << " c=" << c << " d=" << d << " scan=" << scan;
            if (mismatches > 5) return;
          }
        }
      }
    }
  }
  EXPECT_EQ(total, 4096);
}

TEST(Families, EndToEndAskeyWilson) {
  const testing::Check c = testing::family_end_to_end(testing::aw_preset(), 20, 8);
  EXPECT_TRUE(c.ok) << c.detail;
}

TEST(Families, EndToEndRacah) {
  const testing::Check c = testing::family_end_to_end(testing::racah_preset(), 20, 8);
  EXPECT_TRUE(c.ok) << c.detail;
}

}  // namespace
}  // namespace lopq
