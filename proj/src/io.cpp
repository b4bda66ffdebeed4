#include "tournalink/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace tournalink::io {

using nlohmann::json;

std::string_view status_text(Status s) {
  switch (s) {
    case Status::linkless: return "linkless";
    case Status::has_il_rep: return "il-representative";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

Status parse_status(std::string_view text) {
  if (text == "linkless") return Status::linkless;
  if (text == "il-representative" || text == "il") return Status::has_il_rep;
  if (text == "unknown") return Status::unknown;
  throw ParseError("unknown status \"" + std::string(text) + "\"");
}

std::string trace_text(const Verdict& v) {
  std::string out;
  for (const auto& step : v.trace) {
    if (!out.empty()) out += " > ";
    out += to_string(step.rule);
  }
  return out;
}

std::string summary_text(const Verdict& v) {
  std::string out(status_text(v.status));
  if (!v.trace.empty()) out += " (" + std::string(to_string(v.trace.front().rule)) + ")";
  return out;
}

OutputRecord make_record(const ScoreSequence& s, const Verdict& v) {
  return {s.to_string(), std::string(status_text(v.status)), trace_text(v)};
}

std::string summary_line(int n, const StatusCounts& c) {
  return "n=" + std::to_string(n) + " total=" + std::to_string(c.total()) + " linkless=" + std::to_string(c.linkless) +
         " il=" + std::to_string(c.il) + " unknown=" + std::to_string(c.unknown);
}

namespace {

std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char ch : f) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line: " + std::string(line));
  return fields;
}

json step_json(const TraceStep& step) {
  return {{"rule", to_string(step.rule)},
          {"witness", step.witness},
          {"sequence", std::vector<int>(step.sequence.begin(), step.sequence.end())}};
}

json verdict_object(const ScoreSequence& s, const Verdict& v) {
  json trace = json::array();
  for (const auto& step : v.trace) trace.push_back(step_json(step));
  return {{"sequence", std::vector<int>(s.begin(), s.end())}, {"status", status_text(v.status)}, {"trace", trace}};
}

std::pair<ScoreSequence, Verdict> verdict_from(const json& j) {
  try {
    ScoreSequence s(j.at("sequence").get<std::vector<int>>());
    Verdict v;
    v.status = parse_status(j.at("status").get<std::string>());
    for (const auto& step : j.at("trace")) {
      auto rule = parse_rule_id(step.at("rule").get<std::string>());
      if (!rule) throw ParseError("unknown rule id " + step.at("rule").dump());
      v.trace.push_back({*rule, step.at("witness").get<std::string>(),
                         ScoreSequence(step.at("sequence").get<std::vector<int>>())});
    }
    if ((v.status == Status::unknown) != v.trace.empty()) throw ParseError("trace does not match status");
    return {std::move(s), std::move(v)};
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  } catch (const InvalidSequence& e) {
    throw ParseError(std::string("invalid sequence in record: ") + e.what());
  }
}

}  // namespace

std::string to_csv(const std::vector<OutputRecord>& records, std::string_view summary) {
  std::string out = "sequence,status,rule\n";
  for (const auto& r : records) {
    out += csv_field(r.sequence) + "," + csv_field(r.status) + "," + csv_field(r.trace) + "\n";
  }
  if (!summary.empty()) out += std::string(summary) + "\n";
  return out;
}

std::vector<OutputRecord> from_csv(std::string_view text) {
  std::vector<OutputRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "sequence,status,rule") throw ParseError("missing CSV header");
  while (std::getline(in, line)) {
    if (line.empty() || line.starts_with("n=")) continue;
    auto f = split_csv_line(line);
    if (f.size() != 3) throw ParseError("expected 3 CSV fields, got " + std::to_string(f.size()));
    out.push_back({f[0], f[1], f[2]});
  }
  return out;
}

std::string to_table(const std::vector<OutputRecord>& records, std::string_view summary) {
  std::size_t w0 = std::string_view("sequence").size();
  std::size_t w1 = std::string_view("status").size();
  for (const auto& r : records) {
    w0 = std::max(w0, r.sequence.size());
    w1 = std::max(w1, r.status.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w0)) << "sequence" << "  " << std::setw(static_cast<int>(w1))
      << "status" << "  rule\n";
  for (const auto& r : records) {
    out << std::setw(static_cast<int>(w0)) << r.sequence << "  " << std::setw(static_cast<int>(w1)) << r.status << "  "
        << r.trace << "\n";
  }
  if (!summary.empty()) out << summary << "\n";
  return out.str();
}

std::string verdict_json(const ScoreSequence& s, const Verdict& v, int indent) {
  return verdict_object(s, v).dump(indent);
}

std::string listing_json(int n, const std::vector<std::pair<ScoreSequence, Verdict>>& rows, const StatusCounts& c) {
  json records = json::array();
  for (const auto& [s, v] : rows) records.push_back(verdict_object(s, v));
  json doc = {{"n", n},
              {"records", records},
              {"summary",
               {{"total", c.total()}, {"linkless", c.linkless}, {"il", c.il}, {"unknown", c.unknown}}}};
  return doc.dump(2);
}

std::vector<std::pair<ScoreSequence, Verdict>> parse_listing_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.contains("records")) throw ParseError("not a listing document");
  std::vector<std::pair<ScoreSequence, Verdict>> out;
  for (const auto& r : doc["records"]) out.push_back(verdict_from(r));
  return out;
}

Digraph read_edge_list(std::istream& in, std::optional<int> order) {
  std::vector<Arc> arcs;
  std::string line;
  int line_no = 0;
  int max_index = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    if (!(fields >> u)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    std::string rest;
    if (!(fields >> v) || (fields >> rest)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two vertex indices");
    }
    if (u < 0 || v < 0 || u >= Digraph::kMaxVertices || v >= Digraph::kMaxVertices) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
    }
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    const Arc a{static_cast<int>(u), static_cast<int>(v)};
    if (std::find(arcs.begin(), arcs.end(), a) != arcs.end()) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate arc");
    }
    arcs.push_back(a);
    max_index = std::max({max_index, a.tail, a.head});
  }
  const int n = order.value_or(max_index + 1);
  if (max_index >= n) throw ParseError("edge list uses vertex " + std::to_string(max_index) + " but order is " + std::to_string(n));
  return Digraph(n, arcs);
}

Digraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_edge_list(in);
}

std::string write_edge_list(const Digraph& g) {
  std::string out = "# " + std::to_string(g.order()) + " vertices, " + std::to_string(g.arc_count()) + " arcs\n";
  for (const auto& a : g.arcs()) out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

std::string serialize_table(const ClassificationTable& table) {
  json entries = json::array();
  for (const auto& [s, v] : table.entries) entries.push_back(verdict_object(s, v));
  json doc = {{"format_version", TableCache::kFormatVersion},
              {"rule_set_hash", rule_set_hash()},
              {"n", table.n},
              {"entries", entries}};
  return doc.dump();
}

ClassificationTable deserialize_table(std::string_view text, int expected_n, int max_length) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) throw ParseError("cache file is not valid JSON");
  if (doc.value("format_version", -1) != TableCache::kFormatVersion) throw ParseError("format version mismatch");
  if (doc.value("rule_set_hash", std::string()) != rule_set_hash()) throw ParseError("rule-set hash mismatch");
  if (doc.value("n", -1) != expected_n) throw ParseError("length mismatch");
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("missing entries");

  ClassificationTable table;
  table.n = expected_n;
  for (const auto& e : doc["entries"]) {
    auto [s, v] = verdict_from(e);
    switch (v.status) {
      case Status::linkless: ++table.counts.linkless; break;
      case Status::has_il_rep: ++table.counts.il; break;
      case Status::unknown: ++table.counts.unknown; break;
    }
    table.entries.emplace_back(std::move(s), std::move(v));
  }
  const auto expected = enumerate(expected_n, max_length);
  if (table.entries.size() != expected.size() ||
      !std::equal(expected.begin(), expected.end(), table.entries.begin(),
                  [](const ScoreSequence& s, const auto& e) { return s == e.first; })) {
    throw ParseError("entries do not cover the sequences of length " + std::to_string(expected_n));
  }
  return table;
}

TableCache::TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<std::filesystem::path> TableCache::default_directory() {
  if (const char* v = std::getenv("TOURNALINK_CACHE"); v && *v) return std::filesystem::path(v);
  if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return std::filesystem::path(v) / "tournalink";
  if (const char* v = std::getenv("HOME"); v && *v) return std::filesystem::path(v) / ".cache" / "tournalink";
  return std::nullopt;
}

std::filesystem::path TableCache::file_for(int n) const {
  return dir_ / ("table-n" + std::to_string(n) + ".json");
}

std::optional<ClassificationTable> TableCache::load(int n, int max_length, std::string* why) const {
  std::ifstream in(file_for(n));
  if (!in) {
    if (why) *why = "no cache file";
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return deserialize_table(buf.str(), n, max_length);
  } catch (const ParseError& e) {
    if (why) *why = e.what();
    return std::nullopt;
  }
}

void TableCache::store(const ClassificationTable& table) const {
  std::filesystem::create_directories(dir_);
  const auto target = file_for(table.n);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << serialize_table(table);
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace tournalink::io
