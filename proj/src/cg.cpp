#include "tournalink/cg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tournalink::cg {

namespace {

CgCycle cyc(std::initializer_list<int> labels) { return CgCycle{std::vector<int>(labels)}; }

const std::vector<CgLink>& link_table() {
  static const std::vector<CgLink> links = {
      {cyc({4, 5, 7}), cyc({2, 3, 6})},       {cyc({4, 5, 7}), cyc({1, 3, 6})},
      {cyc({4, 5, 7}), cyc({1, 3, 6, 2})},    {cyc({4, 5, 7}), cyc({1, 2, 3, 6})},
      {cyc({1, 4, 7}), cyc({2, 3, 6})},       {cyc({1, 4, 7}), cyc({2, 3, 5})},
      {cyc({1, 4, 7}), cyc({2, 3, 5, 6})},    {cyc({1, 4, 7}), cyc({2, 3, 6, 5})},
      {cyc({1, 6, 7}), cyc({2, 3, 5})},       {cyc({1, 6, 7}), cyc({2, 4, 5})},
      {cyc({1, 6, 7}), cyc({2, 4, 3, 5})},    {cyc({1, 6, 7}), cyc({2, 3, 4, 5})},
      {cyc({1, 3, 6}), cyc({2, 4, 5})},       {cyc({1, 3, 6}), cyc({2, 5, 4, 7})},
      {cyc({1, 3, 6}), cyc({2, 4, 5, 7})},    {cyc({2, 3, 5}), cyc({1, 4, 6, 7})},
      {cyc({2, 3, 5}), cyc({1, 6, 4, 7})},    {cyc({2, 4, 5}), cyc({1, 3, 7, 6})},
      {cyc({2, 4, 5}), cyc({1, 7, 3, 6})},    {cyc({2, 3, 6}), cyc({1, 4, 7, 5})},
      {cyc({2, 3, 6}), cyc({1, 5, 4, 7})},
  };
  return links;
}

const std::vector<CgCycle>& ls_table() {
  static const std::vector<CgCycle> ls = {
      cyc({2, 3, 6}),    cyc({2, 3, 5}),    cyc({1, 3, 6}),    cyc({2, 4, 5}),    cyc({1, 3, 6, 2}),
      cyc({1, 2, 3, 6}), cyc({2, 3, 5, 6}), cyc({2, 3, 6, 5}), cyc({2, 4, 3, 5}), cyc({2, 3, 4, 5}),
  };
  return ls;
}

// Arc test in label space: adjacency[a] has bit b set iff label a -> label b.
bool orientable_in(const std::array<std::uint32_t, 8>& adjacency, const std::vector<int>& labels) {
  const std::size_t k = labels.size();
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<std::size_t>(labels[i]);
    const auto b = static_cast<std::size_t>(labels[(i + 1) % k]);
    forward = forward && ((adjacency[a] >> b) & 1U);
    backward = backward && ((adjacency[b] >> a) & 1U);
  }
  return forward || backward;
}

void require_seven(const Digraph& g) {
  if (g.order() != 7) {
    throw std::invalid_argument("CG labeling needs a 7-vertex digraph, got " + std::to_string(g.order()));
  }
}

std::string arc_text(Arc a) { return std::to_string(a.tail) + "->" + std::to_string(a.head); }

}  // namespace

std::string CgCycle::to_string() const {
  std::string s;
  for (int l : labels) s += std::to_string(l);
  return s;
}

std::span<const CgLink> cg_links() { return link_table(); }
std::span<const CgCycle> ls_set() { return ls_table(); }

bool is_bijection(const Labeling& labeling) {
  auto sorted = labeling;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 7; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

bool orientable(const Digraph& g, const Labeling& labeling, const CgCycle& c) {
  require_seven(g);
  if (!is_bijection(labeling)) throw std::invalid_argument("labeling is not a bijection onto 1..7");
  std::array<Vertex, 8> vertex_of{};
  for (Vertex v = 0; v < 7; ++v) vertex_of[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])] = v;
  const std::size_t k = c.labels.size();
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = vertex_of[static_cast<std::size_t>(c.labels[i])];
    const Vertex b = vertex_of[static_cast<std::size_t>(c.labels[(i + 1) % k])];
    forward = forward && g.has_arc(a, b);
    backward = backward && g.has_arc(b, a);
  }
  return forward || backward;
}

std::optional<Certificate> certificate_search(const Digraph& g, SearchOrder order) {
  require_seven(g);
  const auto& links = link_table();

  // Distinct cycles of the table, so each is tested at most once per labeling.
  std::vector<std::vector<int>> cycles;
  std::vector<std::pair<std::size_t, std::size_t>> link_ids;
  auto id_of = [&](const CgCycle& c) {
    auto it = std::find(cycles.begin(), cycles.end(), c.labels);
    if (it != cycles.end()) return static_cast<std::size_t>(it - cycles.begin());
    cycles.push_back(c.labels);
    return cycles.size() - 1;
  };
  for (const auto& l : links) link_ids.emplace_back(id_of(l.first), id_of(l.second));

  Labeling labeling{1, 2, 3, 4, 5, 6, 7};
  if (order == SearchOrder::reverse_lexicographic) std::reverse(labeling.begin(), labeling.end());

  std::vector<signed char> memo(cycles.size());
  do {
    std::array<std::uint32_t, 8> adjacency{};
    for (Vertex u = 0; u < 7; ++u) {
      std::uint32_t row = 0;
      for (Vertex v = 0; v < 7; ++v) {
        if (g.has_arc(u, v)) row |= 1U << labeling[static_cast<std::size_t>(v)];
      }
      adjacency[static_cast<std::size_t>(labeling[static_cast<std::size_t>(u)])] = row;
    }
    std::fill(memo.begin(), memo.end(), -1);
    auto live = [&](std::size_t id) {
      if (memo[id] < 0) memo[id] = orientable_in(adjacency, cycles[id]) ? 1 : 0;
      return memo[id] == 1;
    };
    const bool clean = std::none_of(link_ids.begin(), link_ids.end(),
                                    [&](const auto& p) { return live(p.first) && live(p.second); });
    if (clean) return Certificate{labeling};
  } while (order == SearchOrder::lexicographic ? std::next_permutation(labeling.begin(), labeling.end())
                                               : std::prev_permutation(labeling.begin(), labeling.end()));
  return std::nullopt;
}

bool verify_certificate(const Digraph& g, const Labeling& labeling) {
  for (const auto& link : cg_links()) {
    if (orientable(g, labeling, link.first) && orientable(g, labeling, link.second)) return false;
  }
  return true;
}

std::string SixVertexVerdict::describe() const {
  if (kind == Kind::few_arcs) {
    return "6-vertex digraph with " + std::to_string(arc_count) + " arcs (at most 23)";
  }
  return "6-vertex digraph misses " + arc_text(first_missing) + " and " + arc_text(second_missing) +
         ", both " + (first_missing.tail == shared ? "leaving" : "entering") + " vertex " +
         std::to_string(shared);
}

std::optional<SixVertexVerdict> theorem29_check(const Digraph& g) {
  if (g.order() != 6) throw std::invalid_argument("theorem29_check needs a 6-vertex digraph");
  for (Vertex y = 0; y < 6; ++y) {
    std::vector<Arc> missing_out;
    std::vector<Arc> missing_in;
    for (Vertex x = 0; x < 6; ++x) {
      if (x == y) continue;
      if (!g.has_arc(y, x)) missing_out.push_back({y, x});
      if (!g.has_arc(x, y)) missing_in.push_back({x, y});
    }
    for (const auto* missing : {&missing_out, &missing_in}) {
      if (missing->size() >= 2) {
        SixVertexVerdict v{SixVertexVerdict::Kind::missing_pair_at_vertex, y, (*missing)[0], (*missing)[1],
                           g.arc_count()};
        return v;
      }
    }
  }
  return std::nullopt;
}

std::optional<SixVertexVerdict> corollary210_check(const Digraph& g) {
  if (g.order() != 6) throw std::invalid_argument("corollary210_check needs a 6-vertex digraph");
  if (g.arc_count() > 23) return std::nullopt;
  SixVertexVerdict v{SixVertexVerdict::Kind::few_arcs};
  v.arc_count = g.arc_count();
  return v;
}

std::string CertificationReport::describe() const {
  std::string out;
  switch (route) {
    case Route::sink_or_source_deletion:
      out = "deleted vertex " + std::to_string(deleted_vertex) +
            " (out-degree 0 or 7); the remaining 7-vertex tournament is not intrinsically linked";
      return out;
    case Route::double_contraction:
      out = "contracted ";
      break;
    case Route::contraction_and_labeling:
      out = "contracted ";
      break;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ", then ";
    out += arc_text(chain[i].arc) + " (on " + std::to_string(chain[i].order) + " vertices)";
  }
  if (const auto* c = std::get_if<Certificate>(&evidence)) {
    out += "; CG labeling";
    for (std::size_t v = 0; v < c->labeling.size(); ++v) {
      out += (v ? ", " : " ") + std::to_string(v) + "->" + std::to_string(c->labeling[v]);
    }
  } else if (const auto* s = std::get_if<SixVertexVerdict>(&evidence)) {
    out += "; " + s->describe();
  }
  return out;
}

std::optional<CertificationReport> certify_tournament8(const Tournament& t) {
  if (t.order() != 8) {
    throw std::invalid_argument("certify_tournament8 needs 8 vertices, got " + std::to_string(t.order()));
  }
  const Digraph& g = t.digraph();
  using Route = CertificationReport::Route;

  for (Vertex v = 0; v < 8; ++v) {
    if (t.score(v) == 0 || t.score(v) == 7) {
      CertificationReport r{Route::sink_or_source_deletion, {}, v, {}};
      return r;
    }
  }

  for (Vertex v = 0; v < 8; ++v) {
    if (t.score(v) != 1) continue;
    for (Vertex w = 0; w < 8; ++w) {
      if (t.score(w) != 6 || !t.beats(w, v)) continue;
      const Arc first{v, std::countr_zero(g.out_mask(v))};
      const auto c1 = contract(g, first);
      const Vertex w1 = c1.vertex_map[static_cast<std::size_t>(w)];
      if (c1.result.in_degree(w1) != 1) continue;
      const Arc second{std::countr_zero(c1.result.in_mask(w1)), w1};
      const auto c2 = contract(c1.result, second);
      auto verdict = theorem29_check(c2.result);
      if (!verdict) verdict = corollary210_check(c2.result);
      if (verdict) {
        return CertificationReport{Route::double_contraction, {{first, 8}, {second, 7}}, -1, *verdict};
      }
    }
  }

  for (const auto& e : contractible_arcs(g)) {
    const auto c = contract(g, e);
    if (auto cert = certificate_search(c.result)) {
      return CertificationReport{Route::contraction_and_labeling, {{e, 8}}, -1, *cert};
    }
  }
  return std::nullopt;
}

}  // namespace tournalink::cg
