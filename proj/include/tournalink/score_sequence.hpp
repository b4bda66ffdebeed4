#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tournalink {

/// Default upper bound on sequence length for enumeration and classification.
inline constexpr int kDefaultMaxLength = 12;

/// Why a list of integers is not a tournament score sequence.
struct LandauViolation {
  enum class Kind { empty, negative, unsorted, value_range, total, prefix_deficit };
  Kind kind;
  std::string message;
};

/// Checks the Landau conditions on an arbitrary integer list. Returns the
/// first failed condition, or nothing when the list is a valid score
/// sequence. Conditions are tested in the order: empty, negative entries,
/// sortedness, value range, total, prefix sums.
std::optional<LandauViolation> landau_check(std::span<const int> values);

class InvalidSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-decreasing out-degree list of a tournament. Every instance satisfies
/// the Landau conditions; construction from invalid values throws.
class ScoreSequence {
 public:
  explicit ScoreSequence(std::vector<int> values);

  static ScoreSequence transitive(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool contains(int value) const;
  int count(int value) const;

  /// "(0, 1, 2)"
  std::string to_string() const;

  friend auto operator<=>(const ScoreSequence&, const ScoreSequence&) = default;
  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<int> values_;
};

/// A multiset of out-degrees that a sequence must contain.
using Fragment = std::vector<int>;

/// All score sequences of length n in lexicographic order.
/// Throws std::out_of_range unless 1 <= n <= max_length.
std::vector<ScoreSequence> enumerate(int n, int max_length = kDefaultMaxLength);

/// Score sequence of the reversed tournament: s'_i = (n-1) - s_{n+1-i}.
ScoreSequence dual(const ScoreSequence& s);

/// The four classification-preserving reductions, in the order they are tried.
enum class ReductionClause {
  strip_zero,     // remove a 0, decrement the rest
  strip_max,      // remove an n-1
  low_pair,       // (1, 1, s3..sn) -> (1, s3-1, .., sn-1)
  high_pair,      // (s1.., n-2, n-2) -> (s1.., s_{n-2}, n-3)
};

struct Reduction {
  ScoreSequence result;
  ReductionClause clause;
};

/// Rule tag of a reduction clause: "L4.1" or "L4.3".
std::string_view rule_tag(ReductionClause clause);
std::string_view describe(ReductionClause clause);

/// First applicable reduction in clause order, or nothing.
std::optional<Reduction> reduce(const ScoreSequence& s);

/// Every applicable reduction, in clause order.
std::vector<Reduction> reductions(const ScoreSequence& s);

/// All distinct sorted sequences obtained by adding a vertex of out-degree d
/// that is beaten by exactly n - d of the existing vertices. Results are
/// sorted lexicographically. Throws std::out_of_range unless 0 <= d <= n.
std::vector<ScoreSequence> extend(const ScoreSequence& s, int out_degree);

/// True iff `needle` (as a multiset) is contained in the values of `s`.
bool contains_submultiset(const ScoreSequence& s, std::span<const int> needle);

/// True iff the multiset union of all fragments is contained in `s`.
bool contains_fragments(const ScoreSequence& s, std::span<const Fragment> fragments);

/// Parses comma-separated integers with optional surrounding parentheses and
/// whitespace, e.g. "1,2,3" or "(1, 2, 3)". Throws InvalidSequence on
/// malformed text.
std::vector<int> parse_integer_list(std::string_view text);

/// Parses and validates a score sequence. Unsorted input is rejected unless
/// `normalize` is set, in which case it is sorted first.
ScoreSequence parse_sequence(std::string_view text, bool normalize = false);

}  // namespace tournalink
