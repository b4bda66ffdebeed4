#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tournalink/digraph.hpp"
#include "tournalink/rules.hpp"

namespace tournalink::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "linkless", "il-representative", "unknown".
std::string_view status_text(Status s);
/// Accepts the status text plus the short form "il". Throws ParseError.
Status parse_status(std::string_view text);

/// Rule ids joined by " > ", outermost first; empty for unknown.
std::string trace_text(const Verdict& v);

/// "il-representative (P3.1)" or "unknown".
std::string summary_text(const Verdict& v);

/// One row of classification output.
struct OutputRecord {
  std::string sequence;  // "(0, 1, 2)"
  std::string status;
  std::string trace;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const ScoreSequence& s, const Verdict& v);

/// Header "sequence,status,rule", one quoted row per record, then the
/// summary line if given.
std::string to_csv(const std::vector<OutputRecord>& records, std::string_view summary = {});
/// Inverse of to_csv; a trailing summary line ("n=...") is skipped.
std::vector<OutputRecord> from_csv(std::string_view text);

std::string to_table(const std::vector<OutputRecord>& records, std::string_view summary = {});

/// {"sequence": [..], "status": "..", "trace": [{"rule", "witness", "sequence"}]}
std::string verdict_json(const ScoreSequence& s, const Verdict& v, int indent = -1);
/// One JSON document: {"n", "records": [...], "summary": {...}}.
std::string listing_json(int n, const std::vector<std::pair<ScoreSequence, Verdict>>& rows, const StatusCounts& counts);
/// Reads back the records of listing_json as (sequence, verdict) pairs.
std::vector<std::pair<ScoreSequence, Verdict>> parse_listing_json(std::string_view text);

/// "n=8 total=167 linkless=147 il=15 unknown=5"
std::string summary_line(int n, const StatusCounts& counts);

/// Edge list: one "u v" per line meaning u -> v, 0-indexed, '#' comments and
/// blank lines ignored. The order is one more than the largest index unless
/// `order` is given. Throws ParseError with the offending line number.
Digraph read_edge_list(std::istream& in, std::optional<int> order = std::nullopt);
Digraph read_edge_list_file(const std::filesystem::path& path);
std::string write_edge_list(const Digraph& g);

/// Persistent per-length classification tables. A file is used only when
/// its format version, rule-set hash and length match and its entries are
/// exactly enumerate(n); otherwise it is regenerated.
class TableCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit TableCache(std::filesystem::path dir);

  /// $TOURNALINK_CACHE, else $XDG_CACHE_HOME/tournalink, else
  /// $HOME/.cache/tournalink; nothing if none is set.
  static std::optional<std::filesystem::path> default_directory();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::filesystem::path file_for(int n) const;

  /// Cached table, or nothing with the reason in `why` (missing, corrupt,
  /// stale).
  std::optional<ClassificationTable> load(int n, int max_length, std::string* why = nullptr) const;
  void store(const ClassificationTable& table) const;

 private:
  std::filesystem::path dir_;
};

std::string serialize_table(const ClassificationTable& table);
/// Throws ParseError on malformed or mismatched documents.
ClassificationTable deserialize_table(std::string_view text, int expected_n, int max_length);

}  // namespace tournalink::io
