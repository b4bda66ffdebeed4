#include "tournalink/score_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

namespace tournalink {

std::optional<LandauViolation> landau_check(std::span<const int> values) {
  using Kind = LandauViolation::Kind;
  const auto n = static_cast<long long>(values.size());
  if (n == 0) return LandauViolation{Kind::empty, "sequence is empty"};

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      return LandauViolation{Kind::negative, "entry " + std::to_string(i + 1) + " is negative (" +
                                                 std::to_string(values[i]) + ")"};
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1]) {
      return LandauViolation{Kind::unsorted, "not non-decreasing: entry " + std::to_string(i + 1) +
                                                 " (" + std::to_string(values[i]) +
                                                 ") is smaller than entry " + std::to_string(i) +
                                                 " (" + std::to_string(values[i - 1]) + ")"};
    }
  }
  if (values.back() > n - 1) {
    return LandauViolation{Kind::value_range, "value " + std::to_string(values.back()) +
                                                  " exceeds n - 1 = " + std::to_string(n - 1)};
  }
  const long long total = std::accumulate(values.begin(), values.end(), 0LL);
  if (total != n * (n - 1) / 2) {
    return LandauViolation{Kind::total, "total " + std::to_string(total) +
                                            " != n(n-1)/2 = " + std::to_string(n * (n - 1) / 2)};
  }
  long long prefix = 0;
  for (long long k = 1; k <= n; ++k) {
    prefix += values[static_cast<std::size_t>(k - 1)];
    if (prefix < k * (k - 1) / 2) {
      return LandauViolation{Kind::prefix_deficit,
                             "prefix of length " + std::to_string(k) + " sums to " +
                                 std::to_string(prefix) + " < " + std::to_string(k * (k - 1) / 2)};
    }
  }
  return std::nullopt;
}

ScoreSequence::ScoreSequence(std::vector<int> values) : values_(std::move(values)) {
  if (auto violation = landau_check(values_)) throw InvalidSequence(violation->message);
}

ScoreSequence ScoreSequence::transitive(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return ScoreSequence(std::move(v));
}

bool ScoreSequence::contains(int value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

int ScoreSequence::count(int value) const {
  auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), value);
  return static_cast<int>(hi - lo);
}

std::string ScoreSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

std::vector<ScoreSequence> enumerate(int n, int max_length) {
  if (n < 1 || n > max_length) {
    throw std::out_of_range("sequence length " + std::to_string(n) + " outside 1.." +
                            std::to_string(max_length));
  }
  const int total = n * (n - 1) / 2;
  std::vector<ScoreSequence> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));

  // Depth-first in ascending value order yields lexicographic output.
  std::function<void(int, int)> extend_prefix = [&](int last, int sum) {
    const int k = static_cast<int>(prefix.size());
    if (k == n) {
      if (sum == total) out.emplace_back(prefix);
      return;
    }
    for (int v = last; v <= n - 1; ++v) {
      const int s = sum + v;
      if (s < (k + 1) * k / 2) continue;
      if (s + (n - k - 1) * (n - 1) < total) continue;
      // Remaining entries are >= v, so the total can only grow.
      if (s + (n - k - 1) * v > total) break;
      prefix.push_back(v);
      extend_prefix(v, s);
      prefix.pop_back();
    }
  };
  extend_prefix(0, 0);
  return out;
}

ScoreSequence dual(const ScoreSequence& s) {
  const int n = s.size();
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (n - 1) - s[static_cast<std::size_t>(n - 1 - i)];
  return ScoreSequence(std::move(v));
}

std::string_view rule_tag(ReductionClause clause) {
  switch (clause) {
    case ReductionClause::strip_zero:
    case ReductionClause::strip_max:
      return "L4.1";
    case ReductionClause::low_pair:
    case ReductionClause::high_pair:
      return "L4.3";
  }
  return "?";
}

std::string_view describe(ReductionClause clause) {
  switch (clause) {
    case ReductionClause::strip_zero: return "removed a vertex of out-degree 0";
    case ReductionClause::strip_max: return "removed a vertex of out-degree n-1";
    case ReductionClause::low_pair: return "contracted the arc between the two out-degree-1 vertices";
    case ReductionClause::high_pair: return "contracted the arc between the two out-degree-(n-2) vertices";
  }
  return "?";
}

namespace {

ScoreSequence checked_reduction(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  if (auto violation = landau_check(values)) {
    throw std::logic_error("reduction produced an invalid sequence: " + violation->message);
  }
  return ScoreSequence(std::move(values));
}

std::optional<Reduction> apply(const ScoreSequence& s, ReductionClause clause) {
  const int n = s.size();
  if (n < 2) return std::nullopt;
  const auto v = s.values();
  switch (clause) {
    case ReductionClause::strip_zero: {
      if (v.front() != 0) return std::nullopt;
      std::vector<int> r;
      for (std::size_t i = 1; i < v.size(); ++i) r.push_back(v[i] - 1);
      return Reduction{checked_reduction(std::move(r)), clause};
    }
    case ReductionClause::strip_max: {
      if (v.back() != n - 1) return std::nullopt;
      return Reduction{checked_reduction({v.begin(), v.end() - 1}), clause};
    }
    case ReductionClause::low_pair: {
      if (n < 3 || v[0] != 1 || v[1] != 1) return std::nullopt;
      std::vector<int> r{1};
      for (std::size_t i = 2; i < v.size(); ++i) r.push_back(v[i] - 1);
      return Reduction{checked_reduction(std::move(r)), clause};
    }
    case ReductionClause::high_pair: {
      if (n < 3 || v[v.size() - 1] != n - 2 || v[v.size() - 2] != n - 2) return std::nullopt;
      std::vector<int> r(v.begin(), v.end() - 2);
      r.push_back(n - 3);
      return Reduction{checked_reduction(std::move(r)), clause};
    }
  }
  return std::nullopt;
}

constexpr ReductionClause kClauseOrder[] = {ReductionClause::strip_zero, ReductionClause::strip_max,
                                            ReductionClause::low_pair, ReductionClause::high_pair};

}  // namespace

std::optional<Reduction> reduce(const ScoreSequence& s) {
  for (auto clause : kClauseOrder) {
    if (auto r = apply(s, clause)) return r;
  }
  return std::nullopt;
}

std::vector<Reduction> reductions(const ScoreSequence& s) {
  std::vector<Reduction> out;
  for (auto clause : kClauseOrder) {
    if (auto r = apply(s, clause)) out.push_back(std::move(*r));
  }
  return out;
}

std::vector<ScoreSequence> extend(const ScoreSequence& s, int out_degree) {
  const int n = s.size();
  if (out_degree < 0 || out_degree > n) {
    throw std::out_of_range("added out-degree " + std::to_string(out_degree) + " outside 0.." +
                            std::to_string(n));
  }
  // Group equal values; the result only depends on how many of each group win
  // against the new vertex.
  std::vector<std::pair<int, int>> groups;  // (value, multiplicity)
  for (int x : s) {
    if (groups.empty() || groups.back().first != x) groups.emplace_back(x, 0);
    ++groups.back().second;
  }
  const int winners = n - out_degree;
  std::vector<int> take(groups.size(), 0);
  std::vector<ScoreSequence> out;

  std::function<void(std::size_t, int)> choose = [&](std::size_t g, int remaining) {
    if (g == groups.size()) {
      if (remaining != 0) return;
      std::vector<int> v{out_degree};
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto [value, mult] = groups[i];
        for (int j = 0; j < mult; ++j) v.push_back(j < take[i] ? value + 1 : value);
      }
      std::sort(v.begin(), v.end());
      out.emplace_back(std::move(v));
      return;
    }
    for (int t = 0; t <= std::min(remaining, groups[g].second); ++t) {
      take[g] = t;
      choose(g + 1, remaining - t);
    }
  };
  choose(0, winners);
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_submultiset(const ScoreSequence& s, std::span<const int> needle) {
  std::map<int, int> need;
  for (int x : needle) ++need[x];
  return std::all_of(need.begin(), need.end(),
                     [&](const auto& kv) { return s.count(kv.first) >= kv.second; });
}

bool contains_fragments(const ScoreSequence& s, std::span<const Fragment> fragments) {
  std::vector<int> all;
  for (const auto& f : fragments) all.insert(all.end(), f.begin(), f.end());
  return contains_submultiset(s, all);
}

std::vector<int> parse_integer_list(std::string_view text) {
  auto trim = [](std::string_view t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    return t;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw InvalidSequence("unbalanced parenthesis in \"" + std::string(text) + "\"");
    text = trim(text.substr(1, text.size() - 2));
  }
  if (text.empty()) throw InvalidSequence("sequence is empty");

  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
      throw InvalidSequence("not an integer: \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ScoreSequence parse_sequence(std::string_view text, bool normalize) {
  auto values = parse_integer_list(text);
  if (normalize) std::sort(values.begin(), values.end());
  return ScoreSequence(std::move(values));
}

}  // namespace tournalink
