// tournalink: classify, enumerate and certify tournament score sequences.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tournalink/acceptance.hpp"
#include "tournalink/cg.hpp"
#include "tournalink/constructions.hpp"
#include "tournalink/digraph.hpp"
#include "tournalink/io.hpp"
#include "tournalink/rules.hpp"

using namespace tournalink;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScoreSequence read_sequence(const std::string& text, bool sort) {
  try {
    return parse_sequence(text, sort);
  } catch (const InvalidSequence& e) {
    throw InputError(e.what());
  }
}

Tournament read_tournament(const std::string& path) {
  Digraph g;
  try {
    g = io::read_edge_list_file(path);
  } catch (const io::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!is_tournament(g)) throw InputError(path + ": not a tournament (need exactly one arc per vertex pair)");
  return Tournament(std::move(g));
}

void print_verdict(const ScoreSequence& s, const Verdict& v, bool json) {
  if (json) {
    std::cout << io::verdict_json(s, v, 2) << "\n";
    return;
  }
  std::cout << io::summary_text(v) << "\n";
  for (const auto& step : v.trace) {
    std::cout << "  " << to_string(step.rule) << " on " << step.sequence.to_string();
    if (!step.witness.empty()) std::cout << ": " << step.witness;
    std::cout << "\n";
  }
}

class Tables {
 public:
  explicit Tables(bool use_cache) {
    if (!use_cache) return;
    if (auto dir = io::TableCache::default_directory()) cache_.emplace(*dir);
  }

  ClassificationTable get(int n) {
    if (n < 1 || n > classifier_.max_length()) {
      throw InputError("n must be between 1 and " + std::to_string(classifier_.max_length()));
    }
    if (cache_) {
      std::string why;
      if (auto t = cache_->load(n, classifier_.max_length(), &why)) return *t;
      if (why != "no cache file") std::cerr << "regenerating n=" << n << " table: " << why << "\n";
    }
    const auto& t = classifier_.classify_all(n);
    if (cache_) {
      try {
        cache_->store(t);
      } catch (const std::exception& e) {
        std::cerr << "warning: could not write cache: " << e.what() << "\n";
      }
    }
    return t;
  }

  Classifier& classifier() { return classifier_; }

 private:
  Classifier classifier_;
  std::optional<io::TableCache> cache_;
};

void print_listing(int n, const std::vector<std::pair<ScoreSequence, Verdict>>& rows, const std::string& format) {
  StatusCounts counts;
  std::vector<io::OutputRecord> records;
  for (const auto& [s, v] : rows) {
    switch (v.status) {
      case Status::linkless: ++counts.linkless; break;
      case Status::has_il_rep: ++counts.il; break;
      case Status::unknown: ++counts.unknown; break;
    }
    records.push_back(io::make_record(s, v));
  }
  const auto summary = io::summary_line(n, counts);
  if (format == "json") std::cout << io::listing_json(n, rows, counts) << "\n";
  else if (format == "table") std::cout << io::to_table(records, summary);
  else std::cout << io::to_csv(records, summary);
}

std::vector<std::pair<ScoreSequence, Verdict>> filter_rows(const ClassificationTable& t,
                                                           const std::optional<Status>& status,
                                                           const std::vector<Fragment>& fragments) {
  std::vector<std::pair<ScoreSequence, Verdict>> rows;
  for (const auto& [s, v] : t.entries) {
    if (status && v.status != *status) continue;
    if (!contains_fragments(s, fragments)) continue;
    rows.emplace_back(s, v);
  }
  return rows;
}

std::optional<Status> read_status(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return io::parse_status(text);
  } catch (const io::ParseError& e) {
    throw InputError(e.what());
  }
}

int run_verify(bool use_cache) {
  bool ok = true;
  for (const auto& r : run_acceptance()) {
    std::cout << format_result(r) << "\n";
    ok = ok && r.passed;
  }
  const auto checks = oracle_suite();
  std::cout << format_report(checks);
  ok = ok && std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });

  if (use_cache) {
    if (auto dir = io::TableCache::default_directory()) {
      io::TableCache cache(*dir);
      Classifier cl;
      for (int n = 8; n <= 11; ++n) {
        std::string why;
        const auto& fresh = cl.classify_all(n);
        const auto cached = cache.load(n, cl.max_length(), &why);
        if (cached && cached->entries == fresh.entries) continue;
        if (cached) why = "entries differ from a fresh computation";
        if (why != "no cache file") std::cout << "cache n=" << n << ": " << why << "; regenerated\n";
        try {
          cache.store(fresh);
        } catch (const std::exception& e) {
          std::cout << "cache n=" << n << ": not writable (" << e.what() << ")\n";
        }
      }
    }
  }
  std::cout << (ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
  return ok ? kOk : kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify tournament score sequences as linkless, il-representative or unknown."};
  app.require_subcommand(1);

  bool json = false;
  bool sort = false;
  bool no_cache = false;
  std::string text;
  std::string path;
  std::string format = "csv";
  std::string status_filter;
  std::vector<std::string> fragments;
  int n = 0;
  std::optional<unsigned> seed;

  auto* classify = app.add_subcommand("classify", "Classify one score sequence");
  classify->add_option("sequence", text, "e.g. 3,3,3,3,4,4,4,4")->required();
  classify->add_flag("--json", json, "JSON output");
  classify->add_flag("--sort", sort, "Sort the input before validating it");

  auto* classify_t = app.add_subcommand("classify-tournament", "Classify the score sequence of a tournament");
  classify_t->add_option("edges", path, "Edge-list file, one 'u v' (u beats v) per line")->required();
  classify_t->add_flag("--json", json, "JSON output");

  const std::vector<std::string> formats = {"csv", "json", "table"};
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every score sequence of length n with its status");
  enumerate_cmd->add_option("n", n, "Sequence length")->required();
  enumerate_cmd->add_option("--status", status_filter, "Only linkless, il-representative (il) or unknown");
  enumerate_cmd->add_option("--format", format, "csv, json or table")->check(CLI::IsMember(formats));
  enumerate_cmd->add_flag("--no-cache", no_cache, "Do not read or write the table cache");

  auto* search = app.add_subcommand("search", "List sequences of length n containing the given fragments");
  search->add_option("n", n, "Sequence length")->required();
  search->add_option("--contains", fragments, "Fragment such as 1,2,2 (repeatable)");
  search->add_option("--status", status_filter, "Only linkless, il-representative (il) or unknown");
  search->add_option("--format", format, "csv, json or table")->check(CLI::IsMember(formats));
  search->add_flag("--no-cache", no_cache, "Do not read or write the table cache");

  auto* realize_cmd = app.add_subcommand("realize", "Print a tournament with the given score sequence");
  realize_cmd->add_option("sequence", text, "Score sequence")->required();
  realize_cmd->add_option("--seed", seed, "Randomly relabel the vertices with this seed");
  realize_cmd->add_flag("--sort", sort, "Sort the input before validating it");

  auto* certify = app.add_subcommand("certify", "Try to show an 8-vertex tournament is not intrinsically linked");
  certify->add_option("edges", path, "Edge-list file")->required();

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria and oracle checks");
  verify->add_flag("--no-cache", no_cache, "Skip the cache consistency pass");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (classify->parsed()) {
      const auto s = read_sequence(text, sort);
      Classifier cl;
      if (s.size() > cl.max_length()) throw InputError("length " + std::to_string(s.size()) + " exceeds the cap");
      print_verdict(s, cl.classify(s), json);
      return kOk;
    }
    if (classify_t->parsed()) {
      const auto t = read_tournament(path);
      const auto s = scores(t).sequence;
      Classifier cl;
      if (s.size() > cl.max_length()) throw InputError("order " + std::to_string(s.size()) + " exceeds the cap");
      if (!json) std::cout << "scores " << s.to_string() << "\n";
      print_verdict(s, cl.classify(s), json);
      return kOk;
    }
    if (enumerate_cmd->parsed() || search->parsed()) {
      std::vector<Fragment> parsed;
      for (const auto& f : fragments) {
        try {
          parsed.push_back(parse_integer_list(f));
        } catch (const InvalidSequence& e) {
          throw InputError("fragment \"" + f + "\": " + e.what());
        }
      }
      const auto status = read_status(status_filter);
      Tables tables(!no_cache);
      const auto t = tables.get(n);
      print_listing(n, filter_rows(t, status, parsed), format);
      return kOk;
    }
    if (realize_cmd->parsed()) {
      const auto s = read_sequence(text, sort);
      Tournament t = realize(s);
      if (seed) {
        std::vector<int> perm(static_cast<std::size_t>(s.size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 rng(*seed);
        std::shuffle(perm.begin(), perm.end(), rng);
        t = relabel(t, perm);
      }
      std::cout << io::write_edge_list(t.digraph());
      return kOk;
    }
    if (certify->parsed()) {
      const auto t = read_tournament(path);
      if (t.order() != 8) throw InputError("certify needs an 8-vertex tournament, got " + std::to_string(t.order()));
      std::cout << "scores " << scores(t).sequence.to_string() << "\n";
      if (const auto report = cg::certify_tournament8(t)) {
        std::cout << "certified: " << report->describe() << "\n";
        return kOk;
      }
      std::cout << "inconclusive\n";
      return kInconclusive;
    }
    if (verify->parsed()) return run_verify(!no_cache);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
