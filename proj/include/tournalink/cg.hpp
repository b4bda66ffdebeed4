#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tournalink/digraph.hpp"

namespace tournalink::cg {

/// A cycle of the Conway-Gordon embedding of K7, written as labels 1..7 in
/// traversal order ("1362" is 1-3-6-2-1).
struct CgCycle {
  std::vector<int> labels;

  std::string to_string() const;
  friend bool operator==(const CgCycle&, const CgCycle&) = default;
};

struct CgLink {
  CgCycle first;
  CgCycle second;
};

/// The 21 non-split two-component links of the CG embedding.
std::span<const CgLink> cg_links();

/// Ten cycles such that every CG link has a component among them.
std::span<const CgCycle> ls_set();

/// labeling[v] is the CG label (1..7) of digraph vertex v.
using Labeling = std::array<int, 7>;

bool is_bijection(const Labeling& labeling);

/// True iff every arc of c, in one of its two traversal directions, is
/// present in g under the labeling.
bool orientable(const Digraph& g, const Labeling& labeling, const CgCycle& c);

struct Certificate {
  Labeling labeling;
};

enum class SearchOrder { lexicographic, reverse_lexicographic };

/// Scans labelings of a 7-vertex digraph for one under which every CG link
/// has a component that is not consistently orientable. With the default
/// order the lexicographically first such labeling is returned. An absent
/// result is inconclusive. Throws std::invalid_argument unless g has 7
/// vertices.
std::optional<Certificate> certificate_search(const Digraph& g,
                                              SearchOrder order = SearchOrder::lexicographic);

/// Re-checks a labeling against all 21 links arc by arc.
bool verify_certificate(const Digraph& g, const Labeling& labeling);

/// Evidence that a 6-vertex digraph is not intrinsically linked.
struct SixVertexVerdict {
  enum class Kind { missing_pair_at_vertex, few_arcs };
  Kind kind;
  Vertex shared = -1;                 // missing_pair_at_vertex only
  Arc first_missing{-1, -1};
  Arc second_missing{-1, -1};
  std::size_t arc_count = 0;

  std::string describe() const;
};

/// G is contained in the complete symmetric digraph on 6 vertices minus two
/// arcs sharing a vertex, both leaving it or both entering it.
std::optional<SixVertexVerdict> theorem29_check(const Digraph& g);

/// G has at most 23 arcs.
std::optional<SixVertexVerdict> corollary210_check(const Digraph& g);

struct ContractionStep {
  Arc arc;     // in the labels of the digraph being contracted
  int order;   // order of that digraph
};

struct CertificationReport {
  enum class Route { sink_or_source_deletion, double_contraction, contraction_and_labeling };
  Route route;
  std::vector<ContractionStep> chain;
  Vertex deleted_vertex = -1;  // sink_or_source_deletion only
  std::variant<std::monostate, Certificate, SixVertexVerdict> evidence;

  std::string describe() const;
};

/// Tries to show that an 8-vertex tournament is not intrinsically linked:
/// deletion of a score-0 or score-7 vertex, then the two-step contraction
/// through a score-1 vertex beaten by a score-6 vertex, then every single
/// consistent contraction followed by certificate_search. An absent result
/// is inconclusive. Throws std::invalid_argument unless t has 8 vertices.
std::optional<CertificationReport> certify_tournament8(const Tournament& t);

}  // namespace tournalink::cg
