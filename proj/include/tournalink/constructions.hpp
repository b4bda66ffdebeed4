#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tournalink/digraph.hpp"

namespace tournalink {

/// Vertex indices of the K_{3,3,2} construction.
namespace k332 {
inline constexpr Vertex a1 = 0, a2 = 1, a3 = 2;
inline constexpr Vertex b1 = 3, b2 = 4, b3 = 5;
inline constexpr Vertex c1 = 6, c2 = 7;
inline constexpr std::array<Vertex, 3> A{a1, a2, a3};
inline constexpr std::array<Vertex, 3> B{b1, b2, b3};
inline constexpr std::array<Vertex, 2> C{c1, c2};
}  // namespace k332

enum class TriangleOrientation { consistent, inconsistent };

/// Which member of the K_{3,3,2} family to build. The H' variant fixes the
/// B triangle, so b_cycle must be left empty for it.
struct Prop31Choice {
  enum class Variant { h, h_prime };
  Variant variant = Variant::h;
  TriangleOrientation a_cycle = TriangleOrientation::consistent;
  std::optional<TriangleOrientation> b_cycle = TriangleOrientation::consistent;
};

/// The four H choices followed by the two H' choices.
std::vector<Prop31Choice> all_prop31_choices();

/// Whether a claim about a construction is computed here or taken on trust
/// (intrinsic linking is a topological fact this library cannot check).
enum class Provenance { computed, external_claim };

struct Construction {
  Tournament tournament;
  Provenance intrinsically_linked = Provenance::external_claim;
  std::string name;
};

/// K_{3,3,2} on parts A, B, C oriented A -> B -> C -> A, plus c1 -> c2.
Digraph build_h();

/// H with the arcs between b2 and C reversed (c_i -> b2), plus b2 -> b1,
/// b2 -> b3.
Digraph build_h_prime();

/// Completes H or H' to a tournament by orienting the remaining triangles.
/// A consistent triangle is a1 -> a2 -> a3 -> a1; an inconsistent one is
/// a1 -> a2, a1 -> a3, a2 -> a3 (same for B). H' closes B with b1 -> b3.
/// Throws std::invalid_argument if an H' choice sets b_cycle.
Construction complete_prop31(const Prop31Choice& choice);

/// A realization of s in which some out-degree-6 vertex beats some
/// out-degree-1 vertex, or nothing if none exists. Throws
/// std::invalid_argument unless s has length 8 and contains both 1 and 6.
std::optional<Tournament> lemma33_witness(const ScoreSequence& s);

struct OracleCheck {
  std::string id;
  std::string description;
  bool passed = false;
  std::string counterexample;
};

/// Small exhaustive checks backing the proof steps the engine relies on.
std::vector<OracleCheck> oracle_suite();

/// One line per check: "id | description | pass|FAIL[ | counterexample]".
std::string format_report(const std::vector<OracleCheck>& checks);

}  // namespace tournalink
