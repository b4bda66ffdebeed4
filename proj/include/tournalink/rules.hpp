#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tournalink/score_sequence.hpp"

namespace tournalink {

enum class Status { linkless, has_il_rep, unknown };

/// Rule identifiers appearing in classification traces.
enum class RuleId { T2_4, L3_4, P3_5, P3_7, P3_1, P3_2, L4_1, O4_2, L4_3, L4_4, L4_5, Dual };

/// "T2.4", "L3.4", ..., "DUAL".
std::string_view to_string(RuleId rule);
std::optional<RuleId> parse_rule_id(std::string_view text);

struct TraceStep {
  RuleId rule;
  std::string witness;
  ScoreSequence sequence;  // the sequence the rule was applied to

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Status plus the chain of rules that produced it, outermost first. The
/// trace is empty exactly when the status is unknown.
struct Verdict {
  Status status = Status::unknown;
  std::vector<TraceStep> trace;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Raised when one sequence receives both a linkless and an
/// intrinsically-linked-representative verdict. Always a bug in the rule
/// encoding.
class ConflictError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct StatusCounts {
  int linkless = 0;
  int il = 0;
  int unknown = 0;
  int total() const noexcept { return linkless + il + unknown; }
  friend bool operator==(const StatusCounts&, const StatusCounts&) = default;
};

struct ClassificationTable {
  int n = 0;
  std::vector<std::pair<ScoreSequence, Verdict>> entries;  // lexicographic
  StatusCounts counts;

  /// Throws std::out_of_range for a sequence not in the table.
  const Verdict& at(const ScoreSequence& s) const;
};

/// The six sequences of the K_{3,3,2} construction family.
std::span<const ScoreSequence> prop31_sequences();
/// The four sequences of the second construction family.
std::span<const ScoreSequence> prop32_sequences();
/// The seven length-8 sequences certified by contraction case analysis.
std::span<const ScoreSequence> prop37_sequences();

/// Length-8 sequences with an intrinsically linked representative from the
/// two construction families, closed under duality (15 sequences, sorted).
std::vector<ScoreSequence> base_il_sequences();

struct RuleMatch {
  RuleId rule;
  std::string witness;
};

/// First direct linkless rule for a length-8 sequence: contains 0 or 7, or
/// {1,1}, {6,6}, {1,5,5,6}, {1,2,2,6} (L3.4); some four entries sum to 8
/// (P3.5); listed or dual-listed (P3.7). Throws std::invalid_argument
/// unless s has length 8.
std::optional<RuleMatch> linkless8_rule(const ScoreSequence& s);

/// Prefix split: some m < 8 with n - m < 8 whose first m values sum to
/// m(m-1)/2 (L4.4).
std::optional<RuleMatch> prefix_split_rule(const ScoreSequence& s);

/// n = 9 with first four summing to 7, or n = 10 with first five summing to
/// 11 (L4.5).
std::optional<RuleMatch> single_cross_arc_rule(const ScoreSequence& s);

/// Lower bound (n-7)(k-1)+1 on linkless sequences of length n given k
/// linkless sequences of length 8. Throws std::invalid_argument for n < 8.
std::int64_t prop51_bound(int n, int k);

/// Fingerprint of the rule set, stored with cached tables.
std::string rule_set_hash();

/// Memoizing classifier. Tables and closure layers are built bottom-up on
/// first use; instances are not safe for concurrent mutation, but results
/// are immutable once returned.
class Classifier {
 public:
  explicit Classifier(int max_length = kDefaultMaxLength);

  int max_length() const noexcept { return max_length_; }

  /// Throws std::out_of_range past max_length and ConflictError on an
  /// inconsistent rule set.
  Verdict classify(const ScoreSequence& s);

  const ClassificationTable& classify_all(int n);

  /// Sequences of length n reachable from the base IL sequences by adding
  /// vertices, closed under duality. Empty for n < 8.
  const std::set<ScoreSequence>& il_closure(int n);

 private:
  struct Origin {
    RuleId rule;                          // P3_1, P3_2, O4_2 or Dual
    std::optional<ScoreSequence> parent;  // absent for listed sequences
    int added_degree = -1;
  };

  void build_closure_through(int n);
  std::vector<TraceStep> il_trace(const ScoreSequence& s) const;
  Verdict evaluate(const ScoreSequence& s);

  int max_length_;
  std::map<int, ClassificationTable> tables_;
  std::map<int, std::set<ScoreSequence>> closure_;
  std::map<ScoreSequence, Origin> origins_;
};

}  // namespace tournalink
