#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "test_support.hpp"

using namespace bottloc;
using bottloc_test::cp1_profile;
using bottloc_test::random_consistent;
using bottloc_test::random_profile;

namespace {

FixedPointProfile cp2_profile() {
  return {2, Flavor::almost_complex, {{{1, 2}, 0}, {{-1, 1}, -1}, {{-2, -1}, -2}}};
}

} // namespace

TEST_CASE("level decomposition of the projective plane") {
  LevelDecomposition levels = aggregate_levels(cp2_profile());
  REQUIRE(levels.level_count() == 3);
  CHECK(levels.levels[0].line_weight == -2);
  CHECK(levels.levels[0].localized_sum == Rational(1, 2));
  CHECK(levels.levels[0].multiplicity == 1);
  CHECK(levels.levels[1].line_weight == -1);
  CHECK(levels.levels[1].localized_sum == Rational(-1));
  CHECK(levels.levels[2].line_weight == 0);
  CHECK(levels.levels[2].localized_sum == Rational(1, 2));
}

TEST_CASE("levels merge equal line weights") {
  FixedPointProfile p{1, Flavor::almost_complex, {{{2}, 3}, {{-3}, 3}, {{1}, 7}}};
  LevelDecomposition levels = aggregate_levels(p);
  REQUIRE(levels.level_count() == 2);
  CHECK(levels.levels[0].line_weight == 3);
  CHECK(levels.levels[0].localized_sum == Rational(1, 6));
  CHECK(levels.levels[0].multiplicity == 2);
  CHECK(levels.levels[1].multiplicity == 1);
}

TEST_CASE("classification covers all three regimes") {
  CHECK(classify(cp2_profile()) == Classification::everywhere_injective);

  FixedPointProfile mixed{1, Flavor::almost_complex, {{{1}, 0}, {{-1}, 0}, {{2}, 5}}};
  CHECK(classify(mixed) == Classification::somewhere_injective_only);

  FixedPointProfile collapsed{1, Flavor::almost_complex, {{{1}, 4}, {{-1}, 4}}};
  CHECK(classify(collapsed) == Classification::not_somewhere_injective);

  CHECK(somewhere_injective(Classification::everywhere_injective));
  CHECK(somewhere_injective(Classification::somewhere_injective_only));
  CHECK_FALSE(somewhere_injective(Classification::not_somewhere_injective));
}

TEST_CASE("classification is lift-shift invariant") {
  std::mt19937 rng(6001);
  std::uniform_int_distribution<int> shift(-8, 8);
  for (int i = 0; i < 60; ++i) {
    FixedPointProfile p = random_profile(rng);
    CHECK(classify(relift(p, shift(rng))) == classify(p));
  }
}

TEST_CASE("vandermonde reconstruction inverts the moment map") {
  std::mt19937 rng(6002);
  for (int i = 0; i < 60; ++i) {
    FixedPointProfile p = random_profile(rng, 3, 4);
    LevelDecomposition decomp = aggregate_levels(p);
    std::vector<int> s;
    std::vector<Rational> expect;
    for (const auto& level : decomp.levels) {
      s.push_back(level.line_weight);
      expect.push_back(level.localized_sum);
    }
    // Feed exactly l moments sum_t s_t^u A_t.
    std::vector<Rational> moments;
    for (std::size_t u = 0; u < s.size(); ++u) moments.push_back(power_sum(p, static_cast<int>(u)));
    auto solved = vandermonde_reconstruct(s, moments);
    REQUIRE(solved.has_value());
    CHECK(*solved == expect);
  }
}

TEST_CASE("vandermonde reconstruction edge cases") {
  CHECK_THROWS_AS(vandermonde_reconstruct({2, 2}, {Rational(1), Rational(1)}),
                  std::invalid_argument);
  CHECK_FALSE(vandermonde_reconstruct({0, 1, 2}, {Rational(1), Rational(1)}).has_value());

  // s = (0, 2), moments (3, 4): A_2 = 2, A_1 = 1.
  auto solved = vandermonde_reconstruct({0, 2}, {Rational(3), Rational(4)});
  REQUIRE(solved.has_value());
  CHECK((*solved)[0] == Rational(1));
  CHECK((*solved)[1] == Rational(2));

  auto empty = vandermonde_reconstruct({}, {});
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("verdicts on the projective plane") {
  TheoremReport report = theorem_report(cp2_profile());
  CHECK(report.consistency.consistent);
  CHECK_FALSE(report.vacuous);
  CHECK(report.classification == Classification::everywhere_injective);
  CHECK(report.chern_top == Rational(1));
  CHECK(report.verdicts[0] == Verdict::verified);
  CHECK(report.verdicts[1] == Verdict::verified);
  CHECK(report.verdicts[2] == Verdict::verified);
  CHECK(report.dichotomy == DichotomyCase::nonzero_everywhere);
  CHECK_FALSE(report.any_violated());
}

TEST_CASE("collapsed lifts fall on the zero side of the dichotomy") {
  // Both points share one line weight; top value 1/2 - 1/2 = 0.
  FixedPointProfile p{1, Flavor::almost_complex, {{{2}, 4}, {{-2}, 4}}};
  TheoremReport report = theorem_report(p);
  CHECK(report.consistency.consistent);
  CHECK(report.chern_top == Rational());
  CHECK(report.classification == Classification::not_somewhere_injective);
  CHECK(report.verdicts[0] == Verdict::not_applicable);
  CHECK(report.verdicts[1] == Verdict::not_applicable);
  CHECK(report.verdicts[2] == Verdict::verified);
  CHECK(report.dichotomy == DichotomyCase::zero_not_somewhere);
}

TEST_CASE("inconsistent data yields vacuous verdicts") {
  FixedPointProfile p = cp2_profile();
  p.points[0].line_weight = 0;
  p.points[1].line_weight = 0;
  p.points[2].line_weight = 5;
  TheoremReport report = theorem_report(p);
  CHECK(report.vacuous);
  CHECK(report.classification == Classification::somewhere_injective_only);
  // chern 25/2 is nonzero and r = n+1, so statement (1) still checks out.
  CHECK(report.verdicts[0] == Verdict::verified);
  CHECK(report.verdicts[1] == Verdict::not_applicable);
  CHECK(report.verdicts[2] == Verdict::not_applicable);
  CHECK(report.dichotomy == DichotomyCase::none);
}

TEST_CASE("too few points with a nonzero top value violates statement one") {
  FixedPointProfile p{1, Flavor::almost_complex, {{{1}, 1}}};
  TheoremReport report = theorem_report(p);
  CHECK(report.vacuous); // single point is never consistent
  CHECK(report.verdicts[0] == Verdict::violated);
  CHECK(report.any_violated());
}

TEST_CASE("consistent profiles from generators never violate a statement") {
  std::mt19937 rng(6003);
  for (int i = 0; i < 40; ++i) {
    TheoremReport report = theorem_report(random_consistent(rng));
    CHECK_FALSE(report.vacuous);
    CHECK_FALSE(report.any_violated());
  }
}

TEST_CASE("dichotomy holds on every consistent profile with minimal point count") {
  std::mt19937 rng(6004);
  for (int i = 0; i < 40; ++i) {
    FixedPointProfile p = random_consistent(rng);
    if (p.point_count() != p.dimension + 1) continue;
    TheoremReport report = theorem_report(p);
    CHECK(report.verdicts[2] == Verdict::verified);
    bool nonzero_side = !report.chern_top.is_zero() &&
                        report.classification == Classification::everywhere_injective;
    bool zero_side = report.chern_top.is_zero() &&
                     report.classification == Classification::not_somewhere_injective;
    CHECK(nonzero_side != zero_side);
  }
}

TEST_CASE("enum names render for reports") {
  CHECK(to_string(Verdict::verified) == "verified");
  CHECK(to_string(Verdict::violated) == "violated");
  CHECK(to_string(Verdict::not_applicable) == "not-applicable");
  CHECK(to_string(Classification::everywhere_injective) == "everywhere-injective");
  CHECK(to_string(Classification::somewhere_injective_only) == "somewhere-injective-only");
  CHECK(to_string(Classification::not_somewhere_injective) == "not-somewhere-injective");
}
