#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tournalink/score_sequence.hpp"

namespace tournalink {

using Vertex = int;

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Loop-free digraph on at most 32 vertices, stored as out/in bitmasks.
/// Symmetric pairs (u->v and v->u) are allowed; parallel arcs in the same
/// direction are not representable.
class Digraph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit Digraph(int n = 0);
  Digraph(int n, std::span<const Arc> arcs);

  int order() const noexcept { return n_; }
  bool has_arc(Vertex u, Vertex v) const { return (out_[check(u)] >> check(v)) & 1U; }
  bool has_symmetric_pair(Vertex u, Vertex v) const { return has_arc(u, v) && has_arc(v, u); }
  std::uint32_t out_mask(Vertex v) const { return out_[check(v)]; }
  std::uint32_t in_mask(Vertex v) const { return in_[check(v)]; }
  int out_degree(Vertex v) const;
  int in_degree(Vertex v) const;
  std::size_t arc_count() const;

  /// Arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const;

  /// Throws std::invalid_argument for loops or out-of-range endpoints.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  /// The digraph with vertex v removed; later vertices shift down by one.
  Digraph without_vertex(Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t check(Vertex v) const;

  int n_;
  std::vector<std::uint32_t> out_;
  std::vector<std::uint32_t> in_;
};

/// A digraph with exactly one arc between every pair of distinct vertices.
class Tournament {
 public:
  /// Throws std::invalid_argument unless g is a tournament.
  explicit Tournament(Digraph g);

  /// Vertex i beats every j < i, so vertex i has score i.
  static Tournament transitive(int n);

  const Digraph& digraph() const noexcept { return g_; }
  int order() const noexcept { return g_.order(); }
  bool beats(Vertex u, Vertex v) const { return g_.has_arc(u, v); }
  int score(Vertex v) const { return g_.out_degree(v); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Digraph g_;
};

bool is_tournament(const Digraph& g);

/// Sorted score sequence plus, for every vertex, its position in that
/// sequence (ties broken by vertex index).
struct ScoreAssignment {
  ScoreSequence sequence;
  std::vector<int> rank;
};

ScoreAssignment scores(const Tournament& t);

/// Deterministic realization: vertex i receives score s[i].
Tournament realize(const ScoreSequence& s);

/// Realization of s (vertex i receives score s[i]) that contains every arc in
/// `forced`, or nothing when no such tournament exists.
std::optional<Tournament> realize_with_arcs(const ScoreSequence& s, std::span<const Arc> forced);

Digraph reverse(const Digraph& g);
Tournament reverse(const Tournament& t);

/// Relabels vertex v as perm[v].
Digraph relabel(const Digraph& g, std::span<const int> perm);
Tournament relabel(const Tournament& t, std::span<const int> perm);

/// A consistently oriented cycle, stored with its minimum vertex first and
/// traversed in arc direction.
struct Cycle {
  std::vector<Vertex> vertices;
  std::uint32_t mask = 0;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices <=> b.vertices; }
  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices == b.vertices; }
};

/// Largest order accepted by the exhaustive cycle enumerators.
inline constexpr int kCycleEnumerationLimit = 10;

/// Every directed cycle of g (2-cycles come from symmetric pairs), each once,
/// sorted. Throws std::length_error above kCycleEnumerationLimit vertices.
std::vector<Cycle> consistent_cycles(const Digraph& g);

/// Unordered pairs of vertex-disjoint directed cycles.
std::vector<std::pair<Cycle, Cycle>> consistent_cycle_pairs(const Digraph& g);

/// Arcs u->v where u has out-degree 1 or v has in-degree 1 (so u is a sink,
/// or v a source, once the arc is removed).
std::vector<Arc> contractible_arcs(const Digraph& g);
bool is_contractible(const Digraph& g, Arc e);

struct Contraction {
  Digraph result;
  Arc arc;                    // the contracted arc, in the input's labels
  Vertex anchor;              // endpoint that is the sink/source, input label
  Vertex merged;              // index of the identified vertex in `result`
  std::vector<int> vertex_map;  // input vertex -> result vertex
  std::vector<Arc> deleted;   // input arcs dropped besides `arc`: the loop
                              // arc and one of each same-direction pair
};

/// Consistent edge contraction of e. When the head is a source in G \ e it
/// is the anchor; otherwise the tail (a sink in G \ e) is. The non-anchor
/// endpoint is removed and the merged vertex takes the anchor's place.
/// Throws std::invalid_argument when e is absent or not contractible.
Contraction contract(const Digraph& g, Arc e);

/// Largest order accepted by the labeled tournament enumerator.
inline constexpr int kLabeledEnumerationLimit = 6;

/// Calls fn on all 2^(n(n-1)/2) labeled tournaments on n vertices, in the
/// order of the bit pattern over pairs (i < j), bit set meaning i -> j.
/// Throws std::out_of_range unless 1 <= n <= kLabeledEnumerationLimit.
void for_each_labeled_tournament(int n, const std::function<void(const Tournament&)>& fn);

std::vector<Tournament> enumerate_labeled_tournaments(
    int n, const std::optional<ScoreSequence>& score_filter = std::nullopt);

/// Brute-force isomorphism test over all n! relabelings.
bool isomorphic(const Digraph& a, const Digraph& b);

}  // namespace tournalink
