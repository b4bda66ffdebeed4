#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "tournalink/digraph.hpp"

using namespace tournalink;

namespace {

ScoreSequence seq(std::vector<int> v) { return ScoreSequence(std::move(v)); }

Digraph cycle_graph(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

Digraph random_digraph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) g.add_arc(u, v);
    }
  }
  return g;
}

Tournament random_tournament(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_arc(u, v);
      else g.add_arc(v, u);
    }
  }
  return Tournament(std::move(g));
}

// Cycles by trying every ordering of every vertex subset that starts at its
// minimum vertex.
std::set<std::vector<int>> naive_cycles(const Digraph& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) vs.push_back(v);
    }
    if (vs.size() < 2) continue;
    do {
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) ok = g.has_arc(vs[i], vs[(i + 1) % vs.size()]);
      if (ok) out.insert(vs);
    } while (std::next_permutation(vs.begin() + 1, vs.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("Digraph basics") {
  Digraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  g.add_arc(1, 2);
  CHECK(g.arc_count() == 3);
  CHECK(g.has_symmetric_pair(0, 1));
  CHECK_FALSE(g.has_symmetric_pair(1, 2));
  CHECK(g.out_degree(1) == 2);
  CHECK(g.in_degree(2) == 1);
  CHECK_THROWS_AS(g.add_arc(1, 1), std::invalid_argument);
  CHECK_THROWS(g.add_arc(0, 3));
  g.remove_arc(1, 0);
  CHECK(g.arcs() == std::vector<Arc>{{0, 1}, {1, 2}});

  const Digraph h = g.without_vertex(0);
  CHECK(h.order() == 2);
  CHECK(h.arcs() == std::vector<Arc>{{0, 1}});
}

TEST_CASE("Tournament validation") {
  CHECK_THROWS_AS(Tournament(Digraph(2)), std::invalid_argument);
  Digraph both(2);
  both.add_arc(0, 1);
  both.add_arc(1, 0);
  CHECK_FALSE(is_tournament(both));
  CHECK(is_tournament(cycle_graph(3)));
}

TEST_CASE("scores") {
  CHECK(scores(Tournament::transitive(4)).sequence == seq({0, 1, 2, 3}));
  CHECK(scores(Tournament(cycle_graph(3))).sequence == seq({1, 1, 1}));
  const auto a = scores(Tournament::transitive(4));
  CHECK(a.rank == std::vector{0, 1, 2, 3});
}

TEST_CASE("realize") {
  CHECK(realize(seq({0, 1, 2})) == Tournament::transitive(3));
  CHECK(scores(realize(seq({1, 1, 1, 3}))).sequence == seq({1, 1, 1, 3}));
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : enumerate(n)) {
      const auto t = realize(s);
      REQUIRE(scores(t).sequence == s);
      for (int v = 0; v < n; ++v) REQUIRE(t.score(v) == s[static_cast<std::size_t>(v)]);
    }
  }
}

TEST_CASE("realize_with_arcs") {
  const Arc impossible[] = {{0, 1}};  // the score-0 vertex cannot win
  CHECK_FALSE(realize_with_arcs(seq({0, 1, 2}), impossible));

  const Arc upset[] = {{1, 2}};  // score-1 vertex beats a score-2 vertex
  const auto t = realize_with_arcs(seq({1, 1, 2, 2}), upset);
  REQUIRE(t);
  CHECK(t->beats(1, 2));
  CHECK(scores(*t).sequence == seq({1, 1, 2, 2}));
}

TEST_CASE("reverse") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto g = random_digraph(6, 0.4, rng);
    CHECK(reverse(reverse(g)) == g);
  }
  CHECK(scores(reverse(Tournament::transitive(4))).sequence == seq({0, 1, 2, 3}));
  CHECK(scores(reverse(realize(seq({1, 2, 2, 3, 5, 5, 5, 5})))).sequence == seq({2, 2, 2, 2, 4, 5, 5, 6}));
}

TEST_CASE("relabel keeps scores") {
  std::mt19937 rng(5);
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < 20; ++i) {
    const auto t = random_tournament(8, rng);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabel(t, perm);
    CHECK(scores(r).sequence == scores(t).sequence);
    for (int u = 0; u < 8; ++u) {
      for (int v = 0; v < 8; ++v) {
        if (u != v) REQUIRE(r.beats(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]) == t.beats(u, v));
      }
    }
  }
}

TEST_CASE("consistent_cycles") {
  CHECK(consistent_cycles(Tournament::transitive(8).digraph()).empty());
  CHECK(consistent_cycles(cycle_graph(3)).size() == 1);

  Digraph pair(2);
  pair.add_arc(0, 1);
  pair.add_arc(1, 0);
  const auto c = consistent_cycles(pair);
  REQUIRE(c.size() == 1);
  CHECK(c[0].length() == 2);

  CHECK_THROWS_AS(consistent_cycles(Digraph(11)), std::length_error);
}

TEST_CASE("consistent_cycles agrees with a naive enumerator") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 4;
    const auto g = random_digraph(n, 0.45, rng);
    std::set<std::vector<int>> got;
    for (const auto& c : consistent_cycles(g)) {
      unsigned mask = 0;
      for (int v : c.vertices) mask |= 1U << v;
      REQUIRE(mask == c.mask);
      got.insert(c.vertices);
    }
    REQUIRE(got == naive_cycles(g));
  }
}

TEST_CASE("consistent_cycle_pairs") {
  CHECK(consistent_cycle_pairs(Tournament::transitive(6).digraph()).empty());

  Digraph two(6);
  for (int i = 0; i < 3; ++i) {
    two.add_arc(i, (i + 1) % 3);
    two.add_arc(3 + i, 3 + (i + 1) % 3);
  }
  CHECK(consistent_cycle_pairs(two).size() == 1);
  CHECK(consistent_cycle_pairs(cycle_graph(6)).empty());
}

TEST_CASE("contractible_arcs") {
  CHECK(contractible_arcs(cycle_graph(3)).size() == 3);
  CHECK(contractible_arcs(realize(seq({2, 2, 2, 3, 4, 5, 5, 5})).digraph()).empty());

  // v1 -> v2 -> v3 with v1 -> v3: v1 -> v2 is contractible (v2 has in-degree
  // 1), v1 -> v3 is not (v1 has out-degree 2, v3 in-degree 2).
  Digraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 2);
  g.add_arc(0, 2);
  CHECK(is_contractible(g, {0, 1}));
  CHECK_FALSE(is_contractible(g, {0, 2}));
}

TEST_CASE("property: a tournament has a contractible arc iff it has a score 1 or n-2") {
  for (int n = 3; n <= 6; ++n) {
    for_each_labeled_tournament(n, [&](const Tournament& t) {
      const auto s = scores(t).sequence;
      REQUIRE(contractible_arcs(t.digraph()).empty() == !(s.contains(1) || s.contains(n - 2)));
    });
  }
}

TEST_CASE("contract") {
  const auto r = contract(cycle_graph(3), {0, 1});
  CHECK(r.result.order() == 2);
  CHECK(r.result.arc_count() == 2);
  CHECK(r.result.has_symmetric_pair(0, 1));
  CHECK_THROWS_AS(contract(Tournament::transitive(4).digraph(), {3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(contract(cycle_graph(3), {1, 0}), std::invalid_argument);
}

TEST_CASE("contracting the out-arc of a score-1 vertex leaves symmetric pairs only at the merged vertex") {
  std::mt19937 rng(13);
  int tried = 0;
  while (tried < 50) {
    const auto t = random_tournament(8, rng);
    for (int v = 0; v < 8; ++v) {
      if (t.score(v) != 1) continue;
      int w = 0;
      while (!t.beats(v, w)) ++w;
      const auto r = contract(t.digraph(), {v, w});
      for (int a = 0; a < 7; ++a) {
        for (int b = a + 1; b < 7; ++b) {
          if (r.result.has_symmetric_pair(a, b)) REQUIRE((a == r.merged || b == r.merged));
        }
      }
      ++tried;
      break;
    }
  }
}

TEST_CASE("contracting a transitive tournament keeps it acyclic") {
  for (int n = 2; n <= 6; ++n) {
    const auto g = Tournament::transitive(n).digraph();
    for (const auto& e : contractible_arcs(g)) CHECK(consistent_cycles(contract(g, e).result).empty());
  }
}

TEST_CASE("enumerate_labeled_tournaments") {
  CHECK(enumerate_labeled_tournaments(3).size() == 8);
  CHECK_THROWS_AS(enumerate_labeled_tournaments(7), std::out_of_range);

  const auto four = enumerate_labeled_tournaments(4, seq({1, 1, 1, 3}));
  REQUIRE(!four.empty());
  for (const auto& t : four) CHECK(isomorphic(t.digraph(), four.front().digraph()));
  CHECK_FALSE(isomorphic(four.front().digraph(), Tournament::transitive(4).digraph()));
}
