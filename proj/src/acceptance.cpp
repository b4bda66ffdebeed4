#include "tournalink/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "tournalink/cg.hpp"
#include "tournalink/constructions.hpp"
#include "tournalink/digraph.hpp"
#include "tournalink/rules.hpp"

namespace tournalink {

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Records a failed condition; keeps the first few messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) msgs_ += (msgs_.empty() ? "" : "; ") + what;
  }
  Outcome done(std::string ok_detail) const {
    if (failures_ == 0) return {true, std::move(ok_detail)};
    return {false, std::to_string(failures_) + " failure(s): " + msgs_};
  }

 private:
  int failures_ = 0;
  std::string msgs_;
};

ScoreSequence seq(std::vector<int> v) { return ScoreSequence(std::move(v)); }

// Linkless rows of the reference n = 8 table, one or two per rule family.
const std::vector<std::vector<int>>& linkless_spot_rows() {
  static const std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 1, 1, 3, 4, 5, 6, 7}, {0, 1, 2, 4, 5, 5, 5, 6}, {1, 1, 1, 5, 5, 5, 5, 5},
      {1, 1, 2, 2, 5, 5, 6, 6}, {2, 2, 2, 2, 2, 6, 6, 6}, {0, 2, 4, 4, 4, 4, 5, 5}, {0, 3, 3, 4, 4, 4, 4, 6},
      {2, 2, 2, 2, 4, 5, 5, 6}, {2, 2, 2, 2, 5, 5, 5, 5}, {1, 2, 2, 3, 5, 5, 5, 5}, {1, 2, 3, 3, 4, 4, 5, 6},
      {1, 3, 4, 4, 4, 4, 4, 4}, {2, 2, 2, 3, 3, 5, 5, 6}, {2, 3, 3, 3, 3, 3, 5, 6}, {3, 3, 3, 3, 3, 3, 4, 6},
  };
  return rows;
}

// IL rows of the reference n = 8 table.
const std::vector<std::vector<int>>& il_table_rows() {
  static const std::vector<std::vector<int>> rows = {
      {1, 2, 3, 4, 4, 4, 4, 6}, {1, 2, 3, 4, 4, 4, 5, 5}, {1, 3, 3, 3, 3, 4, 5, 6}, {1, 3, 3, 3, 4, 4, 5, 5},
      {1, 3, 3, 4, 4, 4, 4, 5}, {2, 2, 3, 3, 3, 4, 5, 6}, {2, 2, 3, 3, 4, 4, 4, 6}, {2, 2, 3, 3, 4, 4, 5, 5},
      {2, 2, 3, 4, 4, 4, 4, 5}, {2, 3, 3, 3, 3, 4, 4, 6}, {2, 3, 3, 3, 3, 4, 5, 5}, {2, 3, 3, 3, 4, 4, 4, 5},
      {2, 3, 3, 4, 4, 4, 4, 4}, {3, 3, 3, 3, 3, 4, 4, 5}, {3, 3, 3, 3, 4, 4, 4, 4},
  };
  return rows;
}

std::set<ScoreSequence> with_status(const ClassificationTable& t, Status s) {
  std::set<ScoreSequence> out;
  for (const auto& [q, v] : t.entries) {
    if (v.status == s) out.insert(q);
  }
  return out;
}

std::string counts_text(const StatusCounts& c) {
  return std::to_string(c.linkless) + "/" + std::to_string(c.il) + "/" + std::to_string(c.unknown);
}

Outcome criterion1() {
  Checker c;
  const int expected[] = {167, 490, 1486, 4639};
  std::string got;
  for (int n = 8; n <= 11; ++n) {
    const auto size = enumerate(n).size();
    got += (got.empty() ? "" : ", ") + std::to_string(size);
    c.expect(size == static_cast<std::size_t>(expected[n - 8]),
             "n=" + std::to_string(n) + " gave " + std::to_string(size));
  }
  return c.done("sizes " + got);
}

Outcome criterion2(Classifier& cl) {
  Checker c;
  const auto& t = cl.classify_all(8);
  c.expect(t.counts == StatusCounts{147, 15, 5}, "counts " + counts_text(t.counts));

  const std::set<ScoreSequence> unknown_expected = {
      seq({2, 2, 2, 3, 4, 5, 5, 5}), seq({2, 2, 2, 4, 4, 4, 5, 5}), seq({2, 2, 3, 3, 3, 5, 5, 5}),
      seq({2, 2, 4, 4, 4, 4, 4, 4}), seq({3, 3, 3, 3, 3, 3, 5, 5})};
  c.expect(with_status(t, Status::unknown) == unknown_expected, "unknown set differs");

  std::set<ScoreSequence> il_expected;
  for (const auto& r : il_table_rows()) il_expected.insert(seq(r));
  c.expect(with_status(t, Status::has_il_rep) == il_expected, "IL set differs from table rows");

  int spot = 0;
  for (const auto& r : linkless_spot_rows()) {
    const auto s = seq(r);
    const bool ok = t.at(s).status == Status::linkless;
    c.expect(ok, s.to_string() + " not linkless");
    spot += ok ? 1 : 0;
  }
  c.expect(spot >= 12, "only " + std::to_string(spot) + " spot rows agree");
  return c.done("linkless/il/unknown " + counts_text(t.counts) + ", " + std::to_string(spot) + " spot rows agree");
}

Outcome criterion3(Classifier& cl) {
  Checker c;
  const StatusCounts expected[] = {{322, 131, 37}, {676, 660, 150}, {1408, 2719, 512}};
  std::string got;
  for (int n = 9; n <= 11; ++n) {
    const auto& t = cl.classify_all(n);
    got += (got.empty() ? "n=" : ", n=") + std::to_string(n) + " " + counts_text(t.counts);
    c.expect(t.counts == expected[n - 9], "n=" + std::to_string(n) + " gave " + counts_text(t.counts));
  }
  return c.done(got);
}

Outcome criterion4() {
  Checker c;
  c.expect(cg::cg_links().size() == 21, "cg_links has " + std::to_string(cg::cg_links().size()) + " entries");
  for (const auto& check : oracle_suite()) {
    if (check.id == "cg-hitting-set") c.expect(check.passed, "uncovered link " + check.counterexample);
  }
  return c.done("21 links, every link has a component in LS (" + std::to_string(cg::ls_set().size()) + " cycles)");
}

Tournament random_tournament(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) g.add_arc(i, j);
      else g.add_arc(j, i);
    }
  }
  return Tournament(std::move(g));
}

Outcome criterion5() {
  Checker c;
  struct Clause {
    std::string name;
    std::function<bool(const ScoreSequence&)> matches;
  };
  const std::vector<Clause> clauses = {
      {"(0,...)", [](const ScoreSequence& s) { return s[0] == 0; }},
      {"(...,5)", [](const ScoreSequence& s) { return s[5] == 5; }},
      {"(1,1,...)", [](const ScoreSequence& s) { return s[0] == 1 && s[1] == 1; }},
      {"(...,4,4)", [](const ScoreSequence& s) { return s[4] == 4 && s[5] == 4; }},
      {"(2,2,2,3,3,3)", [](const ScoreSequence& s) { return s == seq({2, 2, 2, 3, 3, 3}); }},
      {"(1,2,2,3,3,4)", [](const ScoreSequence& s) { return s == seq({1, 2, 2, 3, 3, 4}); }},
  };
  std::mt19937 rng(26);
  std::uniform_int_distribution<int> link(0, 3);  // none, in, out, both
  int certified = 0;
  int total = 0;
  for (const auto& clause : clauses) {
    for (int i = 0; i < 100; ++i) {
      Tournament t = random_tournament(6, rng);
      while (!clause.matches(scores(t).sequence)) t = random_tournament(6, rng);
      Digraph g(7);
      for (const auto& a : t.digraph().arcs()) g.add_arc(a.tail, a.head);
      for (Vertex v = 0; v < 6; ++v) {
        const int kind = link(rng);
        if (kind == 1 || kind == 3) g.add_arc(v, 6);
        if (kind == 2 || kind == 3) g.add_arc(6, v);
      }
      ++total;
      const auto cert = cg::certificate_search(g);
      c.expect(cert.has_value(), clause.name + " sample " + std::to_string(i) + " has no certificate");
      if (cert) {
        const bool ok = cg::verify_certificate(g, cert->labeling);
        c.expect(ok, clause.name + " sample " + std::to_string(i) + " certificate fails re-verification");
        certified += ok ? 1 : 0;
      }
    }
  }
  return c.done(std::to_string(certified) + "/" + std::to_string(total) + " certified and re-verified");
}

Outcome criterion6() {
  Checker c;
  std::set<ScoreSequence> produced;
  for (const auto& choice : all_prop31_choices()) produced.insert(scores(complete_prop31(choice).tournament).sequence);
  const auto listed = prop31_sequences();
  c.expect(produced == std::set<ScoreSequence>(listed.begin(), listed.end()), "score sequences differ from the list");

  using namespace k332;
  const Digraph h = build_h();
  int triangles = 0;
  for (Vertex x : C) {
    for (Vertex a : A) {
      for (Vertex b : B) triangles += (h.has_arc(x, a) && h.has_arc(a, b) && h.has_arc(b, x)) ? 1 : 0;
    }
  }
  c.expect(triangles == 18, std::to_string(triangles) + " consistent c-a-b triangles");
  return c.done(std::to_string(produced.size()) + " sequences reproduced, 18 consistent c-a-b triangles");
}

Outcome criterion7(Classifier& cl) {
  Checker c;
  const auto s = seq({1, 3, 3, 3, 3, 4, 5, 6});
  const auto t = lemma33_witness(s);
  c.expect(t.has_value(), "no witness");
  std::string how;
  if (t) {
    c.expect(scores(*t).sequence == s, "witness has the wrong scores");
    const auto report = cg::certify_tournament8(*t);
    c.expect(report.has_value(), "witness not certified");
    if (report) how = report->describe();
  }
  c.expect(cl.classify(s).status == Status::has_il_rep, s.to_string() + " does not classify as IL");
  return c.done("witness certified (" + how + "); sequence classifies il-representative");
}

Outcome criterion8(Classifier& cl) {
  Checker c;
  long checked = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto& t = cl.classify_all(n);
    for (const auto& [s, v] : t.entries) {
      const auto d = dual(s);
      c.expect(dual(d) == s, "dual not an involution at " + s.to_string());
      c.expect(t.at(d).status == v.status, "dual changes status at " + s.to_string());
      for (const auto& r : reductions(s)) {
        c.expect(cl.classify_all(n - 1).at(r.result).status == v.status,
                 "reduction changes status at " + s.to_string());
      }
      ++checked;
    }
  }
  int realized = 0;
  for (int n = 8; n <= 9; ++n) {
    for (const auto& s : enumerate(n)) {
      c.expect(scores(realize(s)).sequence == s, "realize/scores mismatch at " + s.to_string());
      ++realized;
    }
  }
  try {
    for (int n = 1; n <= 11; ++n) cl.classify_all(n);
  } catch (const ConflictError& e) {
    c.expect(false, std::string("conflict: ") + e.what());
  }
  for (const auto& check : oracle_suite()) c.expect(check.passed, check.id + " " + check.counterexample);
  return c.done(std::to_string(checked) + " sequences dual/reduce-checked, " + std::to_string(realized) +
                " realized, no conflicts, oracle suite clean");
}

Outcome criterion9(Classifier& cl) {
  Checker c;
  const int k = cl.classify_all(8).counts.linkless;
  std::string got;
  for (int n = 9; n <= 11; ++n) {
    const auto bound = prop51_bound(n, k);
    const int count = cl.classify_all(n).counts.linkless;
    got += (got.empty() ? "" : ", ") + std::to_string(bound) + " <= " + std::to_string(count);
    c.expect(bound <= count, "n=" + std::to_string(n) + ": " + std::to_string(bound) + " > " + std::to_string(count));
  }
  return c.done(got);
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
  Classifier cl;
  struct Spec {
    int id;
    const char* title;
    std::optional<double> limit;
    std::function<Outcome()> run;
  };
  const std::vector<Spec> specs = {
      {1, "enumeration counts", 5.0, [] { return criterion1(); }},
      {2, "n=8 table", 1.0, [&] { return criterion2(cl); }},
      {3, "larger tables", 60.0, [&] { return criterion3(cl); }},
      {4, "CG data", 1.0, [] { return criterion4(); }},
      {5, "certificate engine", 30.0, [] { return criterion5(); }},
      {6, "constructions", 1.0, [] { return criterion6(); }},
      {7, "witness vs classification", 5.0, [&] { return criterion7(cl); }},
      {8, "property suites", std::nullopt, [&] { return criterion8(cl); }},
      {9, "linkless lower bound", 1.0, [&] { return criterion9(cl); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& spec : specs) {
    CriterionResult r{spec.id, spec.title, false, "", 0.0, spec.limit};
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = spec.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = o.passed;
    r.detail = o.detail;
    if (spec.limit && r.seconds >= *spec.limit) {
      r.passed = false;
      r.detail += " [over time limit]";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  if (r.limit_seconds) {
    std::snprintf(timing, sizeof timing, "%.2f s, limit %g s", r.seconds, *r.limit_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", r.seconds);
  }
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.title + " (" + timing +
         "): " + r.detail;
}

}  // namespace tournalink
