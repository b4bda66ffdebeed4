#include "tournalink/digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tournalink {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("digraph order " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxVertices));
  }
  out_.assign(static_cast<std::size_t>(n), 0);
  in_.assign(static_cast<std::size_t>(n), 0);
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const auto& a : arcs) add_arc(a.tail, a.head);
}

std::size_t Digraph::check(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
  return static_cast<std::size_t>(v);
}

int Digraph::out_degree(Vertex v) const { return std::popcount(out_mask(v)); }
int Digraph::in_degree(Vertex v) const { return std::popcount(in_mask(v)); }

std::size_t Digraph::arc_count() const {
  std::size_t c = 0;
  for (auto m : out_) c += static_cast<std::size_t>(std::popcount(m));
  return c;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if ((out_[static_cast<std::size_t>(u)] >> v) & 1U) out.push_back({u, v});
    }
  }
  return out;
}

void Digraph::add_arc(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  out_[check(u)] |= 1U << check(v);
  in_[check(v)] |= 1U << check(u);
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  out_[check(u)] &= ~(1U << check(v));
  in_[check(v)] &= ~(1U << check(u));
}

Digraph Digraph::without_vertex(Vertex x) const {
  check(x);
  Digraph h(n_ - 1);
  auto shift = [x](Vertex v) { return v < x ? v : v - 1; };
  for (const auto& a : arcs()) {
    if (a.tail != x && a.head != x) h.add_arc(shift(a.tail), shift(a.head));
  }
  return h;
}

bool is_tournament(const Digraph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.has_arc(u, v) == g.has_arc(v, u)) return false;
    }
  }
  return true;
}

Tournament::Tournament(Digraph g) : g_(std::move(g)) {
  for (Vertex u = 0; u < g_.order(); ++u) {
    for (Vertex v = u + 1; v < g_.order(); ++v) {
      if (g_.has_arc(u, v) == g_.has_arc(v, u)) {
        throw std::invalid_argument("not a tournament: vertices " + std::to_string(u) + " and " +
                                    std::to_string(v) + " are joined by " +
                                    (g_.has_arc(u, v) ? "two arcs" : "no arc"));
      }
    }
  }
}

Tournament Tournament::transitive(int n) {
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < i; ++j) g.add_arc(i, j);
  }
  return Tournament(std::move(g));
}

ScoreAssignment scores(const Tournament& t) {
  const int n = t.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return t.score(a) < t.score(b); });
  std::vector<int> values;
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    values.push_back(t.score(order[static_cast<std::size_t>(pos)]));
    rank[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
  }
  return {ScoreSequence(std::move(values)), std::move(rank)};
}

namespace {

// Residual wins still owed by vertices first..n-1 must form a score sequence
// of the tournament on those vertices.
bool residual_feasible(std::span<const int> need, int first) {
  std::vector<int> rest(need.begin() + first, need.end());
  if (rest.empty()) return true;
  std::sort(rest.begin(), rest.end());
  return !landau_check(rest).has_value();
}

}  // namespace

Tournament realize(const ScoreSequence& s) {
  const int n = s.size();
  std::vector<int> need(s.begin(), s.end());
  Digraph g(n);

  for (int i = 0; i < n; ++i) {
    const int later = n - 1 - i;
    const int wins = need[static_cast<std::size_t>(i)];
    if (wins < 0 || wins > later) throw std::logic_error("realize: infeasible residual");
    // Lexicographic combinations of the later vertices that i beats; the
    // first one leaving a Landau-valid residual always completes.
    std::vector<int> pick(static_cast<std::size_t>(wins));
    std::iota(pick.begin(), pick.end(), i + 1);
    bool placed = false;
    while (!placed) {
      std::vector<int> trial = need;
      std::uint32_t beaten = 0;
      for (int j : pick) beaten |= 1U << j;
      for (int j = i + 1; j < n; ++j) {
        if (!((beaten >> j) & 1U)) --trial[static_cast<std::size_t>(j)];
      }
      if (residual_feasible(trial, i + 1)) {
        for (int j = i + 1; j < n; ++j) {
          if ((beaten >> j) & 1U) g.add_arc(i, j);
          else g.add_arc(j, i);
        }
        need = std::move(trial);
        placed = true;
        break;
      }
      // Advance to the next combination.
      int k = wins - 1;
      while (k >= 0 && pick[static_cast<std::size_t>(k)] == n - wins + k) --k;
      if (k < 0) throw std::logic_error("realize: no feasible completion for " + s.to_string());
      ++pick[static_cast<std::size_t>(k)];
      for (int m = k + 1; m < wins; ++m) pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
    }
  }
  return Tournament(std::move(g));
}

std::optional<Tournament> realize_with_arcs(const ScoreSequence& s, std::span<const Arc> forced) {
  const int n = s.size();
  std::vector<std::vector<int>> force(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& a : forced) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n || a.tail == a.head) {
      throw std::invalid_argument("forced arc outside the vertex range");
    }
    auto& fwd = force[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)];
    auto& bwd = force[static_cast<std::size_t>(a.head)][static_cast<std::size_t>(a.tail)];
    if (bwd == 1) return std::nullopt;
    fwd = 1;
    bwd = -1;
  }

  std::vector<Arc> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  std::vector<int> wins(static_cast<std::size_t>(n), 0);
  std::vector<int> left(static_cast<std::size_t>(n), n - 1);
  Digraph g(n);

  auto ok = [&](int v) {
    const auto k = static_cast<std::size_t>(v);
    return wins[k] <= s[k] && wins[k] + left[k] >= s[k];
  };

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == pairs.size()) return true;
    const auto [i, j] = pairs[idx];
    // Row i finishes at this pair; vertices after i must still be realizable.
    const bool row_end = (j == n - 1);
    for (int dir = 0; dir < 2; ++dir) {
      const Vertex winner = dir == 0 ? i : j;
      const Vertex loser = dir == 0 ? j : i;
      const int f = force[static_cast<std::size_t>(winner)][static_cast<std::size_t>(loser)];
      if (f == -1) continue;
      g.add_arc(winner, loser);
      ++wins[static_cast<std::size_t>(winner)];
      --left[static_cast<std::size_t>(i)];
      --left[static_cast<std::size_t>(j)];
      bool good = ok(i) && ok(j);
      if (good && row_end) {
        std::vector<int> need(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) need[static_cast<std::size_t>(v)] = s[static_cast<std::size_t>(v)] - wins[static_cast<std::size_t>(v)];
        good = residual_feasible(need, i + 1);
      }
      if (good && place(idx + 1)) return true;
      g.remove_arc(winner, loser);
      --wins[static_cast<std::size_t>(winner)];
      ++left[static_cast<std::size_t>(i)];
      ++left[static_cast<std::size_t>(j)];
    }
    return false;
  };
  if (n == 1) return Tournament(std::move(g));
  if (!place(0)) return std::nullopt;
  return Tournament(std::move(g));
}

Digraph reverse(const Digraph& g) {
  Digraph r(g.order());
  for (const auto& a : g.arcs()) r.add_arc(a.head, a.tail);
  return r;
}

Tournament reverse(const Tournament& t) { return Tournament(reverse(t.digraph())); }

Digraph relabel(const Digraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: size mismatch");
  Digraph r(g.order());
  for (const auto& a : g.arcs()) {
    r.add_arc(perm[static_cast<std::size_t>(a.tail)], perm[static_cast<std::size_t>(a.head)]);
  }
  return r;
}

Tournament relabel(const Tournament& t, std::span<const int> perm) {
  return Tournament(relabel(t.digraph(), perm));
}

std::vector<Cycle> consistent_cycles(const Digraph& g) {
  const int n = g.order();
  if (n > kCycleEnumerationLimit) {
    throw std::length_error("cycle enumeration limited to " + std::to_string(kCycleEnumerationLimit) +
                            " vertices, got " + std::to_string(n));
  }
  std::vector<Cycle> out;
  std::vector<Vertex> path;

  // Cycles rooted at their minimum vertex `start`, extended only through
  // larger vertices.
  std::function<void(Vertex, Vertex, std::uint32_t)> walk = [&](Vertex start, Vertex u, std::uint32_t used) {
    if (path.size() >= 2 && g.has_arc(u, start)) out.push_back({path, used});
    std::uint32_t next = g.out_mask(u) & ~used & ~((2U << start) - 1U);
    while (next) {
      const Vertex w = std::countr_zero(next);
      next &= next - 1;
      path.push_back(w);
      walk(start, w, used | (1U << w));
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path = {s};
    walk(s, s, 1U << s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Cycle, Cycle>> consistent_cycle_pairs(const Digraph& g) {
  const auto cycles = consistent_cycles(g);
  std::vector<std::pair<Cycle, Cycle>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if ((cycles[i].mask & cycles[j].mask) == 0) out.emplace_back(cycles[i], cycles[j]);
    }
  }
  return out;
}

bool is_contractible(const Digraph& g, Arc e) {
  return g.has_arc(e.tail, e.head) && (g.out_degree(e.tail) == 1 || g.in_degree(e.head) == 1);
}

std::vector<Arc> contractible_arcs(const Digraph& g) {
  std::vector<Arc> out;
  for (const auto& a : g.arcs()) {
    if (is_contractible(g, a)) out.push_back(a);
  }
  return out;
}

Contraction contract(const Digraph& g, Arc e) {
  if (!g.has_arc(e.tail, e.head)) {
    throw std::invalid_argument("arc " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                                " is not in the digraph");
  }
  const bool head_is_source = g.in_degree(e.head) == 1;
  const bool tail_is_sink = g.out_degree(e.tail) == 1;
  if (!head_is_source && !tail_is_sink) {
    throw std::invalid_argument("arc " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                                " is not consistently contractible");
  }
  const Vertex anchor = head_is_source ? e.head : e.tail;
  const Vertex other = head_is_source ? e.tail : e.head;

  const int n = g.order();
  std::vector<int> map(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) map[static_cast<std::size_t>(v)] = v < other ? v : v - 1;
  map[static_cast<std::size_t>(other)] = map[static_cast<std::size_t>(anchor)];
  const Vertex merged = map[static_cast<std::size_t>(anchor)];

  Contraction c{Digraph(n - 1), e, anchor, merged, map, {}};
  auto to = [&](Vertex v) { return map[static_cast<std::size_t>(v)]; };

  // Arcs at the anchor are kept first so that, of each same-direction pair,
  // the one inherited from the other endpoint is the one dropped.
  std::vector<Arc> ordered;
  for (const auto& a : g.arcs()) {
    if (a.tail != other && a.head != other) ordered.push_back(a);
  }
  for (const auto& a : g.arcs()) {
    if (a.tail == other || a.head == other) ordered.push_back(a);
  }
  for (const auto& a : ordered) {
    if (a == e) continue;
    const Vertex u = to(a.tail);
    const Vertex v = to(a.head);
    if (u == v || c.result.has_arc(u, v)) {
      c.deleted.push_back(a);
      continue;
    }
    c.result.add_arc(u, v);
  }
  std::sort(c.deleted.begin(), c.deleted.end());
  return c;
}

void for_each_labeled_tournament(int n, const std::function<void(const Tournament&)>& fn) {
  if (n < 1 || n > kLabeledEnumerationLimit) {
    throw std::out_of_range("labeled tournament enumeration needs 1 <= n <= " +
                            std::to_string(kLabeledEnumerationLimit));
  }
  std::vector<Arc> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Digraph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      if ((bits >> k) & 1U) g.add_arc(i, j);
      else g.add_arc(j, i);
    }
    fn(Tournament(std::move(g)));
  }
}

std::vector<Tournament> enumerate_labeled_tournaments(int n, const std::optional<ScoreSequence>& score_filter) {
  std::vector<Tournament> out;
  for_each_labeled_tournament(n, [&](const Tournament& t) {
    if (!score_filter || scores(t).sequence == *score_filter) out.push_back(t);
  });
  return out;
}

bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace tournalink
