#include "gextra/extra_connectivity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gextra {

namespace {

VertexMask flood(const std::vector<VertexMask>& rows, int start, const VertexMask& within) {
  VertexMask comp;
  comp.set(static_cast<std::size_t>(start));
  VertexMask frontier = comp;
  while (!frontier.empty()) {
    VertexMask next;
    frontier.for_each([&](int v) { next |= rows[static_cast<std::size_t>(v)]; });
    next &= within;
    next &= ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

// True iff `alive` induces >= 2 components, each with >= floor vertices.
bool splits_with_floor(const std::vector<VertexMask>& rows, VertexMask alive, std::size_t floor) {
  const auto total = static_cast<std::size_t>(alive.count());
  if (total < 2 * std::max<std::size_t>(floor, 1)) return false;
  bool first = true;
  while (!alive.empty()) {
    VertexMask c = flood(rows, alive.lowest(), alive);
    const auto sz = static_cast<std::size_t>(c.count());
    if (first && sz == total) return false;
    if (sz < floor) return false;
    first = false;
    alive &= ~c;
  }
  return true;
}

std::vector<VertexMask> component_masks(const std::vector<VertexMask>& rows, VertexMask alive) {
  std::vector<VertexMask> out;
  while (!alive.empty()) {
    VertexMask c = flood(rows, alive.lowest(), alive);
    out.push_back(c);
    alive &= ~c;
  }
  return out;
}

std::vector<VertexLabel> labels_of(const Graph& g, const VertexMask& m) {
  std::vector<VertexLabel> out;
  m.for_each([&](int v) { out.push_back(g.label(static_cast<VertexIndex>(v))); });
  return out;
}

void require_dense(const Graph& g, const char* what) {
  if (!g.has_dense()) {
    throw BudgetExceededError(std::string(what) + ": host has more than 128 vertices");
  }
}

std::vector<VertexMask> rows_of(const Graph& g) {
  std::vector<VertexMask> rows(g.order());
  for (VertexIndex v = 0; v < g.order(); ++v) rows[v] = g.dense_row(v);
  return rows;
}

// Enumerates vertex subsets of a fixed size in lexicographic index order, one
// representative per orbit of the twin-swapping automorphisms: inside a twin
// class only the lowest-indexed members may be chosen.
class VertexSubsetEnumerator {
 public:
  explicit VertexSubsetEnumerator(const Graph& g) : n_(g.order()), prev_twin_(g.order(), -1) {
    std::map<std::pair<std::uint64_t, std::uint64_t>, int> open_last, closed_last;
    for (VertexIndex v = 0; v < n_; ++v) {
      VertexMask open = g.dense_row(v);
      VertexMask closed = open;
      closed.set(v);
      auto ok = std::make_pair(open.w[0], open.w[1]);
      auto ck = std::make_pair(closed.w[0], closed.w[1]);
      if (auto it = open_last.find(ok); it != open_last.end()) {
        prev_twin_[v] = it->second;
      } else if (auto jt = closed_last.find(ck); jt != closed_last.end()) {
        prev_twin_[v] = jt->second;
      }
      open_last[ok] = static_cast<int>(v);
      closed_last[ck] = static_cast<int>(v);
    }
  }

  // Calls visit(mask) for each representative; visit returns true to stop.
  // Returns false if the candidate allowance ran out before completion.
  template <typename Visit>
  bool run(std::size_t size, std::uint64_t& allowance, bool limited, Visit&& visit) {
    VertexMask cut;
    stop_ = false;
    out_of_budget_ = false;
    recurse(0, size, cut, allowance, limited, visit);
    return !out_of_budget_;
  }

  bool stopped() const { return stop_; }

 private:
  template <typename Visit>
  void recurse(std::size_t pos, std::size_t left, VertexMask& cut, std::uint64_t& allowance,
               bool limited, Visit& visit) {
    if (stop_ || out_of_budget_) return;
    if (left == 0) {
      if (limited) {
        if (allowance == 0) {
          out_of_budget_ = true;
          return;
        }
        --allowance;
      }
      if (visit(static_cast<const VertexMask&>(cut))) stop_ = true;
      return;
    }
    for (std::size_t v = pos; v + left <= n_; ++v) {
      const int p = prev_twin_[v];
      if (p >= 0 && !cut.test(static_cast<std::size_t>(p))) continue;
      cut.set(v);
      recurse(v + 1, left - 1, cut, allowance, limited, visit);
      cut.reset(v);
      if (stop_ || out_of_budget_) return;
    }
  }

  std::size_t n_;
  std::vector<int> prev_twin_;
  bool stop_ = false;
  bool out_of_budget_ = false;
};

VertexCutCertificate make_vertex_certificate(const Graph& g, const std::vector<VertexMask>& rows,
                                             const VertexMask& cut) {
  VertexCutCertificate cert;
  cert.cut = labels_of(g, cut);
  const VertexMask alive = VertexMask::prefix(g.order()) & ~cut;
  std::size_t smallest = g.order();
  for (const auto& c : component_masks(rows, alive)) {
    cert.components.push_back(labels_of(g, c));
    smallest = std::min(smallest, static_cast<std::size_t>(c.count()));
  }
  cert.min_component_size = cert.components.empty() ? 0 : smallest;
  return cert;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("extra connectivity requires a connected graph");
}

// Lowest cut size carrying a qualifying cut for `floor`, searched from
// κ(G) upward. Returns the outcome with the first (lexicographic) witness mask.
struct VertexSearchCore {
  VertexCutSearch result;
  VertexMask witness;
};

VertexSearchCore search_vertex_cut(const Graph& g, std::size_t floor, const SearchBudget& budget) {
  require_connected(g);
  require_dense(g, "vertex cut search");
  VertexSearchCore core;
  auto& res = core.result;
  const auto n = g.order();
  const auto kappa = vertex_connectivity(g);
  if (kappa.is_infinite()) {
    res.status = SearchStatus::Infinite;
    return core;
  }
  const auto rows = rows_of(g);
  const VertexMask full = VertexMask::prefix(n);
  VertexSubsetEnumerator subsets(g);
  std::uint64_t allowance = budget.max_candidates;
  const bool limited = budget.max_candidates != 0;
  for (std::size_t s = static_cast<std::size_t>(kappa.value());; ++s) {
    res.lower_bound = s;
    if (n < s + 2 * floor) {
      res.status = SearchStatus::Infinite;
      return core;
    }
    if (s > budget.max_cut_size) {
      res.status = SearchStatus::BudgetExceeded;
      return core;
    }
    bool found = false;
    const bool complete = subsets.run(s, allowance, limited, [&](const VertexMask& cut) {
      if (splits_with_floor(rows, full & ~cut, floor)) {
        core.witness = cut;
        found = true;
        return true;
      }
      return false;
    });
    if (found) {
      res.status = SearchStatus::Found;
      res.cut_size = s;
      res.lower_bound = s;
      res.certificate = make_vertex_certificate(g, rows, core.witness);
      return core;
    }
    if (!complete) {
      res.status = SearchStatus::BudgetExceeded;
      return core;
    }
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return r > 1e18L ? std::uint64_t{1000000000000000000ULL} : static_cast<std::uint64_t>(r + 0.5L);
}

EdgeCutCertificate make_edge_certificate(const Graph& g, const std::vector<std::size_t>& cut_edges) {
  EdgeCutCertificate cert;
  std::vector<Edge> removed;
  for (auto e : cut_edges) {
    const auto& [u, v] = g.edges()[e];
    removed.push_back(g.edges()[e]);
    cert.cut.emplace_back(g.label(u), g.label(v));
  }
  const Graph rest = g.remove_edges(removed);
  std::size_t smallest = g.order();
  for (const auto& c : connected_components(rest)) {
    LabelledComponent lc;
    for (auto v : c.members) lc.push_back(g.label(v));
    smallest = std::min(smallest, lc.size());
    cert.components.push_back(std::move(lc));
  }
  cert.min_component_size = smallest;
  return cert;
}

}  // namespace

VertexCutSearch g_extra_vertex_connectivity(const Graph& g, std::size_t extra,
                                            const SearchBudget& budget) {
  return search_vertex_cut(g, extra + 1, budget).result;
}

EdgeCutSearch g_extra_edge_connectivity(const Graph& g, std::size_t extra,
                                        const SearchBudget& budget) {
  if (g.order() < 2) throw InputError("edge extra connectivity needs at least 2 vertices");
  require_connected(g);
  EdgeCutSearch res;
  const std::size_t floor = extra + 1;
  const auto n = g.order();
  const auto m = g.size();
  if (n < 2 * floor) {
    res.status = SearchStatus::Infinite;
    return res;
  }
  if (n > budget.max_edge_host_vertices || m > budget.max_edge_host_edges || n > 64) {
    res.status = SearchStatus::BudgetExceeded;
    res.lower_bound = edge_connectivity(g);
    return res;
  }
  auto rows = rows_of(g);
  const VertexMask full = VertexMask::prefix(n);
  const bool limited = budget.max_candidates != 0;
  std::uint64_t allowance = budget.max_candidates;
  auto spend = [&]() {
    if (!limited) return true;
    if (allowance == 0) return false;
    --allowance;
    return true;
  };

  // Phase 1: edge subsets by increasing size while that stays cheaper than
  // enumerating bipartitions.
  const std::uint64_t bipartitions = std::uint64_t{1} << (n - 1);
  std::size_t s = edge_connectivity(g);
  std::vector<std::size_t> chosen;
  bool found = false;
  bool broke_budget = false;
  auto recurse = [&](auto& self, std::size_t pos, std::size_t left) -> void {
    if (found || broke_budget) return;
    if (left == 0) {
      if (!spend()) {
        broke_budget = true;
        return;
      }
      if (splits_with_floor(rows, full, floor)) found = true;
      return;
    }
    for (std::size_t e = pos; e + left <= m; ++e) {
      const auto& [u, v] = g.edges()[e];
      rows[u].reset(v);
      rows[v].reset(u);
      chosen.push_back(e);
      self(self, e + 1, left - 1);
      if (found) return;
      chosen.pop_back();
      rows[u].set(v);
      rows[v].set(u);
      if (broke_budget) return;
    }
  };
  for (; s <= m && binomial(m, s) <= bipartitions / 8; ++s) {
    res.lower_bound = s;
    recurse(recurse, 0, s);
    if (found) {
      res.status = SearchStatus::Found;
      res.cut_size = s;
      res.certificate = make_edge_certificate(g, chosen);
      return res;
    }
    if (broke_budget) {
      res.status = SearchStatus::BudgetExceeded;
      return res;
    }
  }
  res.lower_bound = s;

  // Phase 2: a minimum cut is exactly the edge boundary of a side X with both
  // X and its complement connected, so scan every X containing vertex 0.
  rows = rows_of(g);
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> best_edges;
  for (std::uint64_t bits = 0; bits < bipartitions; ++bits) {
    if (!spend()) {
      res.status = SearchStatus::BudgetExceeded;
      return res;
    }
    VertexMask side;
    side.w[0] = (bits << 1) | 1U;
    const auto here = static_cast<std::size_t>(side.count());
    if (here < floor || n - here < floor) continue;
    const VertexMask other = full & ~side;
    std::size_t crossing = 0;
    side.for_each([&](int v) { crossing += static_cast<std::size_t>((rows[static_cast<std::size_t>(v)] & other).count()); });
    if (crossing > best) continue;
    if (flood(rows, 0, side) != side) continue;
    if (flood(rows, other.lowest(), other) != other) continue;
    std::vector<std::size_t> edges;
    for (std::size_t e = 0; e < m; ++e) {
      const auto& [u, v] = g.edges()[e];
      if (side.test(u) != side.test(v)) edges.push_back(e);
    }
    if (crossing < best || edges < best_edges) {
      best = crossing;
      best_edges = std::move(edges);
    }
  }
  if (best == SIZE_MAX) {
    res.status = SearchStatus::Infinite;
    return res;
  }
  res.status = SearchStatus::Found;
  res.cut_size = best;
  res.lower_bound = best;
  res.certificate = make_edge_certificate(g, best_edges);
  return res;
}

std::size_t adjacent_pairs_in(const Graph& g, std::span<const VertexLabel> set) {
  std::vector<bool> in(g.order(), false);
  for (const auto& l : set) in[g.index_of(l)] = true;
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    if (in[u] && in[v]) ++count;
  }
  return count;
}

std::optional<ConstrainedCutResult> min_constrained_vertex_cut(const Graph& g, std::size_t k,
                                                               const SearchBudget& budget) {
  const std::size_t floor = k + 1;
  auto core = search_vertex_cut(g, floor, budget);
  if (core.result.status == SearchStatus::Infinite) return std::nullopt;
  if (core.result.exceeded()) {
    throw BudgetExceededError("min_constrained_vertex_cut: budget exceeded");
  }
  const auto rows = rows_of(g);
  const VertexMask full = VertexMask::prefix(g.order());
  auto internal_edges = [&](const VertexMask& cut) {
    std::size_t c = 0;
    cut.for_each([&](int v) { c += static_cast<std::size_t>((rows[static_cast<std::size_t>(v)] & cut).count()); });
    return c / 2;
  };
  VertexMask best = core.witness;
  std::size_t best_pairs = internal_edges(best);
  VertexSubsetEnumerator subsets(g);
  std::uint64_t unlimited = 0;
  subsets.run(core.result.cut_size, unlimited, false, [&](const VertexMask& cut) {
    if (best_pairs == 0) return true;
    const auto pairs = internal_edges(cut);
    if (pairs < best_pairs && splits_with_floor(rows, full & ~cut, floor)) {
      best = cut;
      best_pairs = pairs;
    }
    return false;
  });
  ConstrainedCutResult out;
  out.cut_set = labels_of(g, best);
  out.size = out.cut_set.size();
  out.adjacent_pairs = best_pairs;
  out.component_floor = floor;
  return out;
}

std::optional<MinCutFloor> k_max_of_min_cuts(const Graph& g, const SearchBudget& budget) {
  require_connected(g);
  require_dense(g, "k_max_of_min_cuts");
  const auto kappa = vertex_connectivity(g);
  if (kappa.is_infinite()) return std::nullopt;
  const auto size = static_cast<std::size_t>(kappa.value());
  if (size > budget.max_cut_size) throw BudgetExceededError("k_max_of_min_cuts: budget exceeded");
  const auto rows = rows_of(g);
  const VertexMask full = VertexMask::prefix(g.order());
  std::size_t best_floor = 0;
  VertexMask best;
  VertexSubsetEnumerator subsets(g);
  std::uint64_t unlimited = 0;
  subsets.run(size, unlimited, false, [&](const VertexMask& cut) {
    const auto comps = component_masks(rows, full & ~cut);
    if (comps.size() < 2) return false;
    std::size_t smallest = g.order();
    for (const auto& c : comps) smallest = std::min(smallest, static_cast<std::size_t>(c.count()));
    if (smallest > best_floor) {
      best_floor = smallest;
      best = cut;
    }
    return false;
  });
  MinCutFloor out;
  out.k = best_floor - 1;
  out.witness = make_vertex_certificate(g, rows, best);
  return out;
}

namespace {

std::vector<std::set<VertexLabel>> as_sets(const std::vector<LabelledComponent>& comps) {
  std::vector<std::set<VertexLabel>> out;
  for (const auto& c : comps) out.emplace_back(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool check_components(const Graph& rest, const std::vector<LabelledComponent>& recorded,
                      std::size_t min_size) {
  std::vector<LabelledComponent> actual;
  std::size_t smallest = SIZE_MAX;
  for (const auto& c : connected_components(rest)) {
    LabelledComponent lc;
    for (auto v : c.members) lc.push_back(rest.label(v));
    smallest = std::min(smallest, lc.size());
    actual.push_back(std::move(lc));
  }
  return actual.size() >= 2 && smallest == min_size && as_sets(actual) == as_sets(recorded);
}

}  // namespace

bool replay(const Graph& host, const VertexCutCertificate& cert) {
  std::vector<VertexIndex> removed;
  for (const auto& l : cert.cut) {
    auto idx = host.find(l);
    if (!idx) return false;
    removed.push_back(*idx);
  }
  return check_components(host.remove_vertices(removed), cert.components, cert.min_component_size);
}

bool replay(const Graph& host, const EdgeCutCertificate& cert) {
  std::vector<Edge> removed;
  for (const auto& [a, b] : cert.cut) {
    auto u = host.find(a);
    auto v = host.find(b);
    if (!u || !v || !host.adjacent(*u, *v)) return false;
    removed.emplace_back(*u, *v);
  }
  return check_components(host.remove_edges(removed), cert.components, cert.min_component_size);
}

}  // namespace gextra
