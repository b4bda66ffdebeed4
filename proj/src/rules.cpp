#include "tournalink/rules.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>

namespace tournalink {

namespace {

constexpr std::array<std::pair<RuleId, std::string_view>, 12> kRuleNames = {{
    {RuleId::T2_4, "T2.4"},
    {RuleId::L3_4, "L3.4"},
    {RuleId::P3_5, "P3.5"},
    {RuleId::P3_7, "P3.7"},
    {RuleId::P3_1, "P3.1"},
    {RuleId::P3_2, "P3.2"},
    {RuleId::L4_1, "L4.1"},
    {RuleId::O4_2, "O4.2"},
    {RuleId::L4_3, "L4.3"},
    {RuleId::L4_4, "L4.4"},
    {RuleId::L4_5, "L4.5"},
    {RuleId::Dual, "DUAL"},
}};

std::vector<ScoreSequence> make(std::initializer_list<std::vector<int>> rows) {
  std::vector<ScoreSequence> out;
  for (const auto& r : rows) out.emplace_back(r);
  return out;
}

const std::vector<ScoreSequence>& prop31() {
  static const auto v = make({{2, 3, 3, 4, 4, 4, 4, 4},
                              {2, 3, 3, 3, 4, 4, 4, 5},
                              {3, 3, 3, 3, 4, 4, 4, 4},
                              {3, 3, 3, 3, 3, 4, 4, 5},
                              {2, 2, 3, 3, 4, 4, 5, 5},
                              {2, 2, 3, 4, 4, 4, 4, 5}});
  return v;
}

const std::vector<ScoreSequence>& prop32() {
  static const auto v = make({{2, 3, 3, 3, 3, 4, 4, 6},
                              {1, 3, 3, 3, 3, 4, 5, 6},
                              {1, 3, 3, 3, 4, 4, 5, 5},
                              {2, 2, 3, 3, 3, 4, 5, 6}});
  return v;
}

const std::vector<ScoreSequence>& prop37() {
  static const auto v = make({{1, 2, 3, 3, 4, 5, 5, 5},
                              {1, 3, 3, 3, 4, 4, 4, 6},
                              {1, 3, 4, 4, 4, 4, 4, 4},
                              {1, 2, 3, 3, 4, 4, 5, 6},
                              {1, 2, 2, 4, 4, 5, 5, 5},
                              {1, 2, 4, 4, 4, 4, 4, 5},
                              {1, 3, 3, 3, 3, 5, 5, 5}});
  return v;
}

bool listed(const std::vector<ScoreSequence>& list, const ScoreSequence& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

RuleId reduction_rule(ReductionClause clause) {
  return rule_tag(clause) == "L4.1" ? RuleId::L4_1 : RuleId::L4_3;
}

std::string join(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += "+";
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string_view to_string(RuleId rule) {
  for (const auto& [id, name] : kRuleNames) {
    if (id == rule) return name;
  }
  return "?";
}

std::optional<RuleId> parse_rule_id(std::string_view text) {
  for (const auto& [id, name] : kRuleNames) {
    if (name == text) return id;
  }
  return std::nullopt;
}

const Verdict& ClassificationTable::at(const ScoreSequence& s) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), s,
                             [](const auto& entry, const ScoreSequence& key) { return entry.first < key; });
  if (it == entries.end() || it->first != s) {
    throw std::out_of_range(s.to_string() + " is not in the length-" + std::to_string(n) + " table");
  }
  return it->second;
}

std::span<const ScoreSequence> prop31_sequences() { return prop31(); }
std::span<const ScoreSequence> prop32_sequences() { return prop32(); }
std::span<const ScoreSequence> prop37_sequences() { return prop37(); }

std::vector<ScoreSequence> base_il_sequences() {
  std::set<ScoreSequence> all;
  for (const auto* list : {&prop31(), &prop32()}) {
    for (const auto& s : *list) {
      all.insert(s);
      all.insert(dual(s));
    }
  }
  return {all.begin(), all.end()};
}

std::optional<RuleMatch> linkless8_rule(const ScoreSequence& s) {
  if (s.size() != 8) throw std::invalid_argument("linkless8_rule needs a length-8 sequence");

  if (s.contains(0)) return RuleMatch{RuleId::L3_4, "contains 0"};
  if (s.contains(7)) return RuleMatch{RuleId::L3_4, "contains 7"};
  static const std::array<std::pair<std::vector<int>, std::string_view>, 4> fragments = {{
      {{1, 1}, "contains 1, 1"},
      {{6, 6}, "contains 6, 6"},
      {{1, 5, 5, 6}, "contains 1, 5, 5, 6"},
      {{1, 2, 2, 6}, "contains 1, 2, 2, 6"},
  }};
  for (const auto& [frag, text] : fragments) {
    if (contains_submultiset(s, frag)) return RuleMatch{RuleId::L3_4, std::string(text)};
  }

  const auto v = s.values();
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) {
        for (int d = c + 1; d < 8; ++d) {
          const std::array<int, 4> four{v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)],
                                        v[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(d)]};
          if (std::accumulate(four.begin(), four.end(), 0) == 8) {
            return RuleMatch{RuleId::P3_5, "four out-degrees sum to 8: " + join(four)};
          }
        }
      }
    }
  }

  if (listed(prop37(), s)) return RuleMatch{RuleId::P3_7, "listed sequence"};
  if (listed(prop37(), dual(s))) return RuleMatch{RuleId::P3_7, "dual of listed sequence " + dual(s).to_string()};
  return std::nullopt;
}

std::optional<RuleMatch> prefix_split_rule(const ScoreSequence& s) {
  const int n = s.size();
  int prefix = 0;
  for (int m = 1; m < n; ++m) {
    prefix += s[static_cast<std::size_t>(m - 1)];
    if (m < 8 && n - m < 8 && prefix == m * (m - 1) / 2) {
      return RuleMatch{RuleId::L4_4, "first " + std::to_string(m) + " values sum to " + std::to_string(prefix) +
                                         " = C(" + std::to_string(m) + ",2)"};
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> single_cross_arc_rule(const ScoreSequence& s) {
  const int n = s.size();
  const auto v = s.values();
  if (n == 9 && std::accumulate(v.begin(), v.begin() + 4, 0) == 7) {
    return RuleMatch{RuleId::L4_5, "9 vertices, first four values sum to 7"};
  }
  if (n == 10 && std::accumulate(v.begin(), v.begin() + 5, 0) == 11) {
    return RuleMatch{RuleId::L4_5, "10 vertices, first five values sum to 11"};
  }
  return std::nullopt;
}

std::int64_t prop51_bound(int n, int k) {
  if (n < 8) throw std::invalid_argument("prop51_bound needs n >= 8");
  return static_cast<std::int64_t>(n - 7) * (k - 1) + 1;
}

std::string rule_set_hash() {
  // FNV-1a over a canonical description of every rule input.
  std::string text = "tournalink-rules-v2;";
  for (const auto* list : {&prop31(), &prop32(), &prop37()}) {
    for (const auto& s : *list) text += s.to_string();
    text += ";";
  }
  text += "L3.4:0,7,11,66,1556,1226;P3.5:any4=8;L4.4:prefix;L4.5:9/4/7,10/5/11;O4.2;DUAL";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Classifier::Classifier(int max_length) : max_length_(max_length) {
  if (max_length < 1) throw std::invalid_argument("max_length must be positive");
}

void Classifier::build_closure_through(int n) {
  if (n < 8 || closure_.contains(n)) return;
  if (n == 8) {
    auto& layer = closure_[8];
    for (const auto& s : prop31()) {
      layer.insert(s);
      origins_.try_emplace(s, Origin{RuleId::P3_1, std::nullopt});
    }
    for (const auto& s : prop32()) {
      layer.insert(s);
      origins_.try_emplace(s, Origin{RuleId::P3_2, std::nullopt});
    }
  } else {
    build_closure_through(n - 1);
    const auto& below = closure_.at(n - 1);
    auto& layer = closure_[n];
    for (const auto& parent : below) {
      for (int d = 0; d <= n - 1; ++d) {
        for (auto& child : extend(parent, d)) {
          origins_.try_emplace(child, Origin{RuleId::O4_2, parent, d});
          layer.insert(std::move(child));
        }
      }
    }
  }
  auto& layer = closure_.at(n);
  std::vector<ScoreSequence> members(layer.begin(), layer.end());
  for (const auto& s : members) {
    auto d = dual(s);
    if (layer.insert(d).second) origins_.try_emplace(d, Origin{RuleId::Dual, s});
  }
}

const std::set<ScoreSequence>& Classifier::il_closure(int n) {
  if (n < 1 || n > max_length_) throw std::out_of_range("closure length outside 1.." + std::to_string(max_length_));
  if (n < 8) {
    static const std::set<ScoreSequence> empty;
    return empty;
  }
  build_closure_through(n);
  return closure_.at(n);
}

std::vector<TraceStep> Classifier::il_trace(const ScoreSequence& s) const {
  std::vector<TraceStep> trace;
  std::optional<ScoreSequence> cur = s;
  while (cur) {
    const auto& o = origins_.at(*cur);
    std::string witness;
    switch (o.rule) {
      case RuleId::P3_1: witness = "oriented K_{3,3,2} construction"; break;
      case RuleId::P3_2: witness = "listed construction with an intrinsically linked representative"; break;
      case RuleId::O4_2:
        witness = "adds a vertex of out-degree " + std::to_string(o.added_degree) + " to " + o.parent->to_string();
        break;
      case RuleId::Dual: witness = "dual of " + o.parent->to_string(); break;
      default: break;
    }
    trace.push_back({o.rule, std::move(witness), *cur});
    cur = o.parent;
  }
  return trace;
}

namespace {

// Trace of an already classified sequence that keeps reducing while some
// reduction leads to a classified sequence, so chains end as short as they
// can (reductions preserve status).
std::vector<TraceStep> reduced_trace(const std::map<int, ClassificationTable>& tables, const ScoreSequence& s) {
  const Verdict& v = tables.at(s.size()).at(s);
  if (s.size() <= 7) return v.trace;
  for (const auto& r : reductions(s)) {
    const Verdict& sub = tables.at(r.result.size()).at(r.result);
    if (sub.status != v.status) continue;
    std::vector<TraceStep> chain{
        {reduction_rule(r.clause), std::string(describe(r.clause)) + ", leaving " + r.result.to_string(), s}};
    const auto rest = reduced_trace(tables, r.result);
    chain.insert(chain.end(), rest.begin(), rest.end());
    return chain;
  }
  return v.trace;
}

}  // namespace

Verdict Classifier::evaluate(const ScoreSequence& s) {
  const int n = s.size();
  if (n <= 7) {
    return {Status::linkless,
            {{RuleId::T2_4, "tournaments on at most 7 vertices are not intrinsically linked", s}}};
  }

  std::vector<std::vector<TraceStep>> linkless;
  std::vector<std::vector<TraceStep>> il;
  const ClassificationTable& below = tables_.at(n - 1);
  const ScoreSequence d = dual(s);

  auto consider = [&](const ScoreSequence& t, const std::vector<TraceStep>& prefix) {
    auto with = [&](TraceStep step) {
      auto chain = prefix;
      chain.push_back(std::move(step));
      return chain;
    };
    if (n == 8) {
      if (auto m = linkless8_rule(t)) linkless.push_back(with({m->rule, m->witness, t}));
      if (listed(prop31(), t)) il.push_back(with({RuleId::P3_1, "oriented K_{3,3,2} construction", t}));
      if (listed(prop32(), t)) {
        il.push_back(with({RuleId::P3_2, "listed construction with an intrinsically linked representative", t}));
      }
    }
    for (const auto& r : reductions(t)) {
      const Verdict& sub = below.at(r.result);
      if (sub.status == Status::unknown) continue;
      auto chain = with({reduction_rule(r.clause),
                         std::string(describe(r.clause)) + ", leaving " + r.result.to_string(), t});
      const auto rest = reduced_trace(tables_, r.result);
      chain.insert(chain.end(), rest.begin(), rest.end());
      (sub.status == Status::linkless ? linkless : il).push_back(std::move(chain));
    }
    if (n >= 9) {
      if (auto m = prefix_split_rule(t)) linkless.push_back(with({m->rule, m->witness, t}));
      if (auto m = single_cross_arc_rule(t)) linkless.push_back(with({m->rule, m->witness, t}));
    }
  };

  consider(s, {});
  if (n >= 9 && closure_.at(n).contains(s)) il.push_back(il_trace(s));
  if (d != s) consider(d, {{RuleId::Dual, "classified through the dual " + d.to_string(), s}});

  if (!linkless.empty() && !il.empty()) {
    std::string msg = "conflicting rules for " + s.to_string() + ": linkless by";
    for (const auto& step : linkless.front()) msg += " " + std::string(to_string(step.rule));
    msg += ", IL representative by";
    for (const auto& step : il.front()) msg += " " + std::string(to_string(step.rule));
    throw ConflictError(msg);
  }
  if (!linkless.empty()) return {Status::linkless, std::move(linkless.front())};
  if (!il.empty()) return {Status::has_il_rep, std::move(il.front())};
  return {};
}

const ClassificationTable& Classifier::classify_all(int n) {
  if (n < 1 || n > max_length_) {
    throw std::out_of_range("sequence length " + std::to_string(n) + " outside 1.." + std::to_string(max_length_));
  }
  if (auto it = tables_.find(n); it != tables_.end()) return it->second;
  if (n > 1) classify_all(n - 1);
  if (n >= 8) build_closure_through(n);

  ClassificationTable table;
  table.n = n;
  for (auto& s : enumerate(n, max_length_)) {
    Verdict v = evaluate(s);
    switch (v.status) {
      case Status::linkless: ++table.counts.linkless; break;
      case Status::has_il_rep: ++table.counts.il; break;
      case Status::unknown: ++table.counts.unknown; break;
    }
    table.entries.emplace_back(std::move(s), std::move(v));
  }
  return tables_.emplace(n, std::move(table)).first->second;
}

Verdict Classifier::classify(const ScoreSequence& s) { return classify_all(s.size()).at(s); }

}  // namespace tournalink
