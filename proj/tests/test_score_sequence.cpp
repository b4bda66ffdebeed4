#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "tournalink/digraph.hpp"
#include "tournalink/score_sequence.hpp"

using namespace tournalink;

namespace {

ScoreSequence seq(std::vector<int> v) { return ScoreSequence(std::move(v)); }

// Sorted score sequences of all labeled tournaments, by brute force.
std::set<ScoreSequence> brute_force_sequences(int n) {
  std::set<ScoreSequence> out;
  for_each_labeled_tournament(n, [&](const Tournament& t) { out.insert(scores(t).sequence); });
  return out;
}

}  // namespace

TEST_CASE("landau_check") {
  CHECK_FALSE(landau_check(std::vector{0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK_FALSE(landau_check(std::vector{1, 1, 1, 3}));

  const auto v = landau_check(std::vector{0, 1, 2, 4, 5, 5, 5, 5});
  REQUIRE(v);
  CHECK(v->kind == LandauViolation::Kind::total);
  CHECK(v->message.find("27") != std::string::npos);

  CHECK(landau_check(std::vector<int>{})->kind == LandauViolation::Kind::empty);
  CHECK(landau_check(std::vector{-1, 2, 2})->kind == LandauViolation::Kind::negative);
  CHECK(landau_check(std::vector{1, 0, 2})->kind == LandauViolation::Kind::unsorted);
  CHECK(landau_check(std::vector{0, 0, 3})->kind == LandauViolation::Kind::value_range);
  CHECK(landau_check(std::vector{1, 1, 1, 1, 6})->kind == LandauViolation::Kind::value_range);
  // Sum 6 and values in range, but the first two sum to 0 < 1.
  CHECK(landau_check(std::vector{0, 0, 3, 3})->kind == LandauViolation::Kind::prefix_deficit);
}

TEST_CASE("ScoreSequence rejects invalid values") {
  CHECK_THROWS_AS(seq({0, 0}), InvalidSequence);
  CHECK_NOTHROW(seq({0}));
  CHECK(seq({0, 1, 2}).to_string() == "(0, 1, 2)");
  CHECK(ScoreSequence::transitive(4) == seq({0, 1, 2, 3}));
}

TEST_CASE("enumerate matches brute force for small n") {
  for (int n = 1; n <= 6; ++n) {
    const auto listed = enumerate(n);
    CHECK(std::is_sorted(listed.begin(), listed.end()));
    CHECK(std::set<ScoreSequence>(listed.begin(), listed.end()) == brute_force_sequences(n));
    CHECK(std::set<ScoreSequence>(listed.begin(), listed.end()).size() == listed.size());
  }
  CHECK(enumerate(1) == std::vector{seq({0})});
  CHECK(enumerate(3) == std::vector{seq({0, 1, 2}), seq({1, 1, 1})});
}

TEST_CASE("enumerate counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 22, 59, 167, 490, 1486, 4639};
  for (int n = 1; n <= 11; ++n) CHECK(enumerate(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(enumerate(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate(13), std::out_of_range);
  CHECK_THROWS_AS(enumerate(9, 8), std::out_of_range);
}

TEST_CASE("dual") {
  CHECK(dual(seq({0, 1, 2, 3, 4, 5, 6, 7})) == seq({0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(dual(seq({1, 1, 1, 3, 4, 5, 6, 7})) == seq({0, 1, 2, 3, 4, 6, 6, 6}));
  CHECK(dual(seq({2, 2, 3, 4, 4, 4, 4, 5})) == seq({2, 3, 3, 3, 3, 4, 5, 5}));
  for (int n = 1; n <= 10; ++n) {
    for (const auto& s : enumerate(n)) REQUIRE(dual(dual(s)) == s);
  }
}

TEST_CASE("dual is the score sequence of the reversed tournament") {
  for (const auto& s : enumerate(8)) CHECK(scores(reverse(realize(s))).sequence == dual(s));
}

TEST_CASE("reduce") {
  const auto r1 = reduce(seq({0, 1, 2, 3, 4, 5, 6, 7}));
  REQUIRE(r1);
  CHECK(r1->result == seq({0, 1, 2, 3, 4, 5, 6}));
  CHECK(rule_tag(r1->clause) == "L4.1");

  const auto r2 = reduce(seq({1, 1, 3, 3, 4, 4, 5, 7}));
  REQUIRE(r2);
  // strip_max applies first here (7 = n - 1); the low pair is also available.
  CHECK(r2->clause == ReductionClause::strip_max);
  const auto all = reductions(seq({1, 1, 3, 3, 4, 4, 5, 7}));
  const auto low = std::find_if(all.begin(), all.end(), [](const Reduction& r) {
    return r.clause == ReductionClause::low_pair;
  });
  REQUIRE(low != all.end());
  CHECK(low->result == seq({1, 2, 2, 3, 3, 4, 6}));
  CHECK(rule_tag(low->clause) == "L4.3");

  CHECK_FALSE(reduce(seq({2, 2, 3, 3, 4, 4, 5, 5})));
  CHECK_FALSE(reduce(seq({0})));

  const auto high = reductions(seq({1, 1, 2, 3, 4, 4}));
  CHECK(std::any_of(high.begin(), high.end(), [](const Reduction& r) {
    return r.clause == ReductionClause::high_pair && r.result == seq({1, 1, 2, 3, 3});
  }));
}

TEST_CASE("reductions always give valid shorter sequences") {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& s : enumerate(n)) {
      for (const auto& r : reductions(s)) REQUIRE(r.result.size() == n - 1);
    }
  }
}

TEST_CASE("extend") {
  CHECK(extend(seq({3, 3, 3, 3, 4, 4, 4, 4}), 7) ==
        std::vector{seq({3, 3, 3, 3, 4, 4, 4, 5, 7}), seq({3, 3, 3, 4, 4, 4, 4, 4, 7})});
  CHECK(extend(seq({0, 1, 2}), 0) == std::vector{seq({0, 1, 2, 3})});
  CHECK(extend(seq({1, 1, 1}), 3) == std::vector{seq({1, 1, 1, 3})});
  CHECK_THROWS_AS(extend(seq({1, 1, 1}), 4), std::out_of_range);
  CHECK_THROWS_AS(extend(seq({1, 1, 1}), -1), std::out_of_range);
}

TEST_CASE("extend covers exactly the sequences one vertex longer") {
  // Every sequence of length n+1 arises from deleting some vertex of a
  // realization, so the union over all extensions is enumerate(n+1).
  for (int n = 1; n <= 8; ++n) {
    std::set<ScoreSequence> reached;
    for (const auto& s : enumerate(n)) {
      for (int d = 0; d <= n; ++d) {
        const auto ext = extend(s, d);
        CHECK(std::is_sorted(ext.begin(), ext.end()));
        CHECK(std::adjacent_find(ext.begin(), ext.end()) == ext.end());
        reached.insert(ext.begin(), ext.end());
      }
    }
    const auto all = enumerate(n + 1);
    CHECK(reached == std::set<ScoreSequence>(all.begin(), all.end()));
  }
}

TEST_CASE("contains_fragments") {
  const auto s = seq({1, 2, 2, 4, 4, 4, 5, 6});
  CHECK(contains_fragments(s, std::vector<Fragment>{{1, 2, 2}, {6}}));
  CHECK(contains_fragments(s, std::vector<Fragment>{}));
  CHECK_FALSE(contains_fragments(seq({1, 2, 3, 3, 4, 4, 5, 6}), std::vector<Fragment>{{2, 2}}));
  // The union of the fragments counts multiplicity.
  CHECK_FALSE(contains_fragments(s, std::vector<Fragment>{{4, 4}, {4, 4}}));
  CHECK(contains_submultiset(s, std::vector{4, 2, 4}));
  CHECK_FALSE(contains_submultiset(s, std::vector{3}));
}

TEST_CASE("parsing") {
  CHECK(parse_integer_list("1,2,3") == std::vector{1, 2, 3});
  CHECK(parse_integer_list(" ( 1, 2 ,3 ) ") == std::vector{1, 2, 3});
  CHECK_THROWS_AS(parse_integer_list("1,,2"), InvalidSequence);
  CHECK_THROWS_AS(parse_integer_list("1,a"), InvalidSequence);
  CHECK_THROWS_AS(parse_integer_list(""), InvalidSequence);

  CHECK(parse_sequence("(1, 1, 1)") == seq({1, 1, 1}));
  CHECK_THROWS_AS(parse_sequence("1,0,2"), InvalidSequence);
  CHECK(parse_sequence("1,0,2", true) == seq({0, 1, 2}));
  CHECK_THROWS_AS(parse_sequence("0,1,2,4,5,5,5,5"), InvalidSequence);
}

TEST_CASE("property: landau_check agrees with enumerate on random lists") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 7; ++n) {
    const auto all = enumerate(n);
    std::uniform_int_distribution<int> value(0, n - 1);
    for (int i = 0; i < 300; ++i) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (auto& x : v) x = value(rng);
      std::sort(v.begin(), v.end());
      const bool ok = !landau_check(v).has_value();
      const bool listed = std::any_of(all.begin(), all.end(), [&](const ScoreSequence& s) {
        return std::equal(s.begin(), s.end(), v.begin(), v.end());
      });
      CHECK(ok == listed);
    }
  }
}
