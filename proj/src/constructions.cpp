#include "tournalink/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "tournalink/cg.hpp"

namespace tournalink {

using namespace k332;

std::vector<Prop31Choice> all_prop31_choices() {
  using V = Prop31Choice::Variant;
  constexpr auto con = TriangleOrientation::consistent;
  constexpr auto inc = TriangleOrientation::inconsistent;
  return {
      {V::h, con, con},          {V::h, con, inc},          {V::h, inc, con},
      {V::h, inc, inc},          {V::h_prime, con, std::nullopt}, {V::h_prime, inc, std::nullopt},
  };
}

Digraph build_h() {
  Digraph h(8);
  for (Vertex a : A) {
    for (Vertex b : B) h.add_arc(a, b);
  }
  for (Vertex b : B) {
    for (Vertex c : C) h.add_arc(b, c);
  }
  for (Vertex c : C) {
    for (Vertex a : A) h.add_arc(c, a);
  }
  h.add_arc(c1, c2);
  return h;
}

Digraph build_h_prime() {
  Digraph h = build_h();
  for (Vertex c : C) {
    h.remove_arc(b2, c);
    h.add_arc(c, b2);
  }
  h.add_arc(b2, b1);
  h.add_arc(b2, b3);
  return h;
}

namespace {

void orient_triangle(Digraph& g, const std::array<Vertex, 3>& t, TriangleOrientation o) {
  g.add_arc(t[0], t[1]);
  if (o == TriangleOrientation::consistent) {
    g.add_arc(t[1], t[2]);
    g.add_arc(t[2], t[0]);
  } else {
    g.add_arc(t[0], t[2]);
    g.add_arc(t[1], t[2]);
  }
}

std::string orientation_name(TriangleOrientation o) {
  return o == TriangleOrientation::consistent ? "consistent" : "inconsistent";
}

// Rotation- and reflection-free form of a cycle's label list.
std::vector<int> cycle_key(const std::vector<int>& labels) {
  std::vector<int> best;
  const std::size_t k = labels.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < k; ++start) {
      std::vector<int> cand;
      for (std::size_t i = 0; i < k; ++i) {
        cand.push_back(dir == 0 ? labels[(start + i) % k] : labels[(start + k - i) % k]);
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

bool has_transitive_triangle(const Tournament& t) {
  const int n = t.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        const bool cyclic = (t.beats(a, b) && t.beats(b, c) && t.beats(c, a)) ||
                            (t.beats(b, a) && t.beats(c, b) && t.beats(a, c));
        if (!cyclic) return true;
      }
    }
  }
  return false;
}

std::string arcs_text(const Digraph& g) {
  std::string out;
  for (const auto& a : g.arcs()) out += (out.empty() ? "" : " ") + std::to_string(a.tail) + ">" + std::to_string(a.head);
  return out;
}

Tournament random_tournament(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_arc(i, j);
      else g.add_arc(j, i);
    }
  }
  return Tournament(std::move(g));
}

}  // namespace

Construction complete_prop31(const Prop31Choice& choice) {
  const bool prime = choice.variant == Prop31Choice::Variant::h_prime;
  if (prime && choice.b_cycle) throw std::invalid_argument("H' fixes the B triangle; b_cycle must be empty");
  if (!prime && !choice.b_cycle) throw std::invalid_argument("H needs a B triangle orientation");

  Digraph g = prime ? build_h_prime() : build_h();
  orient_triangle(g, A, choice.a_cycle);
  std::string name = prime ? "H'" : "H";
  name += ", A " + orientation_name(choice.a_cycle);
  if (prime) {
    g.add_arc(b1, b3);
  } else {
    orient_triangle(g, B, *choice.b_cycle);
    name += ", B " + orientation_name(*choice.b_cycle);
  }
  return {Tournament(std::move(g)), Provenance::external_claim, std::move(name)};
}

std::optional<Tournament> lemma33_witness(const ScoreSequence& s) {
  if (s.size() != 8 || !s.contains(1) || !s.contains(6)) {
    throw std::invalid_argument("lemma33_witness needs a length-8 sequence containing 1 and 6, got " + s.to_string());
  }
  for (Vertex w = 0; w < 8; ++w) {
    if (s[static_cast<std::size_t>(w)] != 6) continue;
    for (Vertex v = 0; v < 8; ++v) {
      if (s[static_cast<std::size_t>(v)] != 1) continue;
      const Arc forced[] = {{w, v}};
      if (auto t = realize_with_arcs(s, forced)) return t;
    }
  }
  return std::nullopt;
}

std::vector<OracleCheck> oracle_suite() {
  std::vector<OracleCheck> checks;

  {
    OracleCheck c{"transitive-triangle-5", "every labeled 5-tournament has a transitive triangle (1024 cases)", false, {}};
    c.passed = true;
    for_each_labeled_tournament(5, [&](const Tournament& t) {
      if (c.passed && !has_transitive_triangle(t)) {
        c.passed = false;
        c.counterexample = arcs_text(t.digraph());
      }
    });
    checks.push_back(std::move(c));
  }

  {
    OracleCheck c{"transitive-acyclic", "transitive tournaments on 1..8 vertices have no consistent cycle", false, {}};
    c.passed = true;
    for (int n = 1; n <= 8 && c.passed; ++n) {
      if (!consistent_cycles(Tournament::transitive(n).digraph()).empty()) {
        c.passed = false;
        c.counterexample = "n=" + std::to_string(n);
      }
    }
    checks.push_back(std::move(c));
  }

  {
    OracleCheck c{"contraction-hygiene",
                  "200 random consistent contractions leave no loops and no same-direction duplicates", false, {}};
    c.passed = true;
    std::mt19937 rng(20190612);
    int done = 0;
    while (done < 200 && c.passed) {
      // Alternate between tournaments and once-contracted digraphs, which
      // carry symmetric pairs.
      Digraph g = random_tournament(8, rng).digraph();
      if (done % 2 == 1) {
        const auto first = contractible_arcs(g);
        if (first.empty()) continue;
        g = contract(g, first[std::uniform_int_distribution<std::size_t>(0, first.size() - 1)(rng)]).result;
      }
      const auto arcs = contractible_arcs(g);
      if (arcs.empty()) continue;
      const Arc e = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)];
      const auto r = contract(g, e);

      std::set<std::pair<int, int>> expected;
      for (const auto& a : g.arcs()) {
        if (a == e) continue;
        const int u = r.vertex_map[static_cast<std::size_t>(a.tail)];
        const int v = r.vertex_map[static_cast<std::size_t>(a.head)];
        if (u != v) expected.emplace(u, v);
      }
      std::set<std::pair<int, int>> actual;
      for (const auto& a : r.result.arcs()) actual.emplace(a.tail, a.head);
      bool loops = false;
      for (Vertex v = 0; v < r.result.order(); ++v) loops = loops || r.result.has_arc(v, v);
      const bool sizes = r.result.order() == g.order() - 1 &&
                         g.arc_count() == 1 + r.result.arc_count() + r.deleted.size();
      if (loops || actual != expected || !sizes) {
        c.passed = false;
        c.counterexample = arcs_text(g) + " contracting " + std::to_string(e.tail) + ">" + std::to_string(e.head);
      }
      ++done;
    }
    checks.push_back(std::move(c));
  }

  {
    OracleCheck c{"cg-hitting-set", "every CG link has a component in LS", false, {}};
    std::set<std::vector<int>> ls;
    for (const auto& cyc : cg::ls_set()) ls.insert(cycle_key(cyc.labels));
    c.passed = true;
    for (const auto& link : cg::cg_links()) {
      if (!ls.contains(cycle_key(link.first.labels)) && !ls.contains(cycle_key(link.second.labels))) {
        c.passed = false;
        c.counterexample = link.first.to_string() + "-" + link.second.to_string();
        break;
      }
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

std::string format_report(const std::vector<OracleCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += c.id + " | " + c.description + " | " + (c.passed ? "pass" : "FAIL");
    if (!c.counterexample.empty()) out += " | " + c.counterexample;
    out += "\n";
  }
  return out;
}

}  // namespace tournalink
