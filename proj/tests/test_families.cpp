#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "flagsym/families.hpp"
#include "flagsym/isoclass.hpp"
#include "test_util.hpp"

using namespace flagsym;

TEST_CASE("family tournament construction") {
  CHECK(family_tournament(4, 1).code() == "4:110111");
  CHECK(sorted_scores(family_tournament(5, 1)) == ScoreVector{1, 1, 2, 3, 3});
  CHECK(sorted_scores(family_tournament(7, 2)) ==
        ScoreVector{1, 2, 2, 3, 4, 4, 5});
  CHECK_THROWS_AS(family_tournament(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(family_tournament(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(family_tournament(5, 0), std::invalid_argument);
}

TEST_CASE("family scores match the published formula when n >= 2k+1") {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      if (n < 2 * k + 1) continue;
      CHECK(sorted_scores(family_tournament(n, k)) ==
            testutil::family_score_formula(n, k));
    }
  }
}

TEST_CASE("family tournaments are never transitive") {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      CHECK_FALSE(is_transitive(family_tournament(n, k)));
    }
  }
}

TEST_CASE("restriction of the (5,1) family to {1,2,5} is the 3-cycle") {
  const Tournament sub = family_tournament(5, 1).subtournament({1, 2, 5});
  CHECK(sub.code() == "3:101");
  CHECK(three_cycle_count(sub) == 1);
}

TEST_CASE("triple (1,2,4) of the (4,1) family is cyclic") {
  CHECK(triple_class(family_tournament(4, 1), 1, 2, 4) == TripleClass::Cyclic);
}

TEST_CASE("cyclic triples are exactly {(i, j, n) : i <= k < j < n}") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      const Tournament t = family_tournament(n, k);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int l = j + 1; l <= n; ++l) {
            const bool expected = l == n && i <= k && j > k;
            CHECK((triple_class(t, i, j, l) == TripleClass::Cyclic) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("family metrics on the documented instances") {
  const MetricSpec m41 = family_metric(FamilyParams::unit(4, 1));
  CHECK(m41.lambda(1, 3) == 2);
  CHECK(m41.lambda(2, 4) == 2);
  CHECK(m41.lambda(1, 4) == 1);

  const MetricSpec m52 = family_metric(FamilyParams::unit(5, 2));
  CHECK(m52.lambda(2, 5) == 2);  // l25 = l12 + l15

  FamilyParams p63{6, 3, {Rational(1), Rational(2), Rational(3), Rational(4),
                          Rational(5), Rational(7)}};
  const MetricSpec m63 = family_metric(p63);
  CHECK(m63.lambda(3, 6) == 10);  // l36 = l12 + l23 + l16 = 1 + 2 + 7

  CHECK_THROWS_AS(family_metric(FamilyParams{4, 1, {Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      family_metric(FamilyParams{
          4, 1, {Rational(1), Rational(-1), Rational(1), Rational(1)}}),
      std::invalid_argument);
}

TEST_CASE("family check passes on the paper grid and one beyond") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{
           {4, 1}, {5, 1}, {5, 2}, {6, 1}, {6, 2}, {6, 3}, {9, 6}}) {
    const FamilyCheck check = verify_family(n, k);
    INFO("n=" << n << " k=" << k);
    std::string all_failures;
    for (const auto& f : check.failures) all_failures += f + "; ";
    INFO(all_failures);
    CHECK(check.passed());
    CHECK(check.dimension == n);
  }
}

TEST_CASE("4-subtournaments of families are transitive or strong, and Hamiltonian") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      const Tournament t = family_tournament(n, k);
      CHECK_FALSE(four_subtournament_profile(t).has_forbidden());
      CHECK(is_hamiltonian(t));
    }
  }
}

TEST_CASE("the (4,1) family is the parabolic strong class") {
  CHECK(is_parabolic(family_tournament(4, 1)));
  CHECK(are_isomorphic(family_tournament(4, 1),
                       Tournament::parabolic_reference(4)));
}

TEST_CASE("distinct k at n >= 5 give non-isomorphic tournaments") {
  for (int n = 5; n <= 9; ++n) {
    for (int k1 = 1; k1 <= n - 3; ++k1) {
      for (int k2 = k1 + 1; k2 <= n - 3; ++k2) {
        const Tournament a = family_tournament(n, k1);
        const Tournament b = family_tournament(n, k2);
        CHECK_FALSE(are_isomorphic(a, b));
        if (n >= 2 * k2 + 1) {  // formula range covers both indices
          CHECK(sorted_scores(a) != sorted_scores(b));
        }
      }
    }
  }
}

TEST_CASE("k and n-1-k are reversal-duals sharing a score multiset") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2},
                                                             {8, 2}, {9, 3}}) {
    const int dual = n - 1 - k;
    REQUIRE(dual <= n - 3);
    const Tournament a = family_tournament(n, k);
    const Tournament b = family_tournament(n, dual);
    CHECK(sorted_scores(a) == sorted_scores(b));
    CHECK_FALSE(are_isomorphic(a, b));
    CHECK(are_isomorphic(a.reversed(), b));
  }
}

TEST_CASE("symbolic matrix spells out the closed form") {
  const auto sym = family_matrix_symbolic(5, 2);
  CHECK(sym[0][0] == "0");
  CHECK(sym[0][1] == "l1_2");
  CHECK(sym[0][2] == "l1_2+l2_3");
  CHECK(sym[0][4] == "l1_5");
  CHECK(sym[1][4] == "l1_2+l1_5");  // the exceptional l25
  CHECK(sym[2][4] == "l3_4+l4_5");  // ordinary chain l35
  CHECK(sym[1][0] == sym[0][1]);
}

TEST_CASE("matrix values agree with the metric accessor") {
  const FamilyParams p = FamilyParams::unit(6, 2);
  const auto matrix = family_matrix_values(p);
  const MetricSpec m = family_metric(p);
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 6; ++j) {
      CHECK(matrix[i - 1][j - 1] == (i == j ? Rational(0) : m.lambda(i, j)));
    }
  }
}
