#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gextra/graph.hpp"

namespace gextra {

/// Limits on the exhaustive search. Exceeding any of them yields a
/// BudgetExceeded outcome, never a guessed value.
struct SearchBudget {
  std::size_t max_cut_size = 8;             // vertex search: largest cut size tried
  std::size_t max_edge_host_vertices = 24;  // edge search host caps
  std::size_t max_edge_host_edges = 40;
  std::uint64_t max_candidates = 0;         // subsets examined per query; 0 = unlimited
};

class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LabelledComponent = std::vector<VertexLabel>;

struct VertexCutCertificate {
  std::vector<VertexLabel> cut;
  std::vector<LabelledComponent> components;
  std::size_t min_component_size = 0;
};

struct EdgeCutCertificate {
  std::vector<std::pair<VertexLabel, VertexLabel>> cut;
  std::vector<LabelledComponent> components;
  std::size_t min_component_size = 0;
};

enum class SearchStatus { Found, Infinite, BudgetExceeded };

template <typename Certificate>
struct CutSearchResult {
  SearchStatus status = SearchStatus::BudgetExceeded;
  std::size_t cut_size = 0;     // Found
  std::size_t lower_bound = 0;  // every qualifying cut has at least this size
  std::optional<Certificate> certificate;

  bool found() const { return status == SearchStatus::Found; }
  bool exceeded() const { return status == SearchStatus::BudgetExceeded; }
  /// Throws BudgetExceededError when the search did not finish.
  ExtendedCount value() const {
    switch (status) {
      case SearchStatus::Found:
        return ExtendedCount::finite(cut_size);
      case SearchStatus::Infinite:
        return ExtendedCount::infinite();
      case SearchStatus::BudgetExceeded:
        break;
    }
    throw BudgetExceededError("search budget exceeded (no cut below size " +
                              std::to_string(lower_bound) + ")");
  }
};

using VertexCutSearch = CutSearchResult<VertexCutCertificate>;
using EdgeCutSearch = CutSearchResult<EdgeCutCertificate>;

/// Minimum cut set A whose removal leaves components of at least
/// component_floor vertices; adjacent_pairs counts host edges inside A.
struct ConstrainedCutResult {
  std::vector<VertexLabel> cut_set;
  std::size_t size = 0;
  std::size_t adjacent_pairs = 0;
  std::size_t component_floor = 0;
};

struct MinCutFloor {
  std::size_t k = 0;
  VertexCutCertificate witness;
};

/// κ_g: smallest vertex set whose removal leaves >= 2 components, each with
/// at least g+1 vertices. Ties go to the lexicographically smallest cut by
/// vertex index. Infinite is reported only after exhausting every feasible size.
VertexCutSearch g_extra_vertex_connectivity(const Graph& g, std::size_t extra,
                                            const SearchBudget& budget = {});

/// λ_g, the edge analogue. Minimum cuts always split the host into exactly two
/// connected sides, so the result is exact whenever the host caps are met.
EdgeCutSearch g_extra_edge_connectivity(const Graph& g, std::size_t extra,
                                        const SearchBudget& budget = {});

/// λ_k(G) in the rooted-product theorem; same contract as λ_g.
inline EdgeCutSearch lambda_k(const Graph& g, std::size_t k, const SearchBudget& budget = {}) {
  return g_extra_edge_connectivity(g, k, budget);
}

/// Minimum-size cut leaving every component with >= k+1 vertices; among those,
/// fewest internal edges, then lexicographically smallest. Throws
/// BudgetExceededError if the budget prevents a decision.
std::optional<ConstrainedCutResult> min_constrained_vertex_cut(const Graph& g, std::size_t k,
                                                               const SearchBudget& budget = {});

/// Largest k such that some minimum vertex cut leaves all components with
/// >= k+1 vertices. Absent for complete graphs.
std::optional<MinCutFloor> k_max_of_min_cuts(const Graph& g, const SearchBudget& budget = {});

std::size_t adjacent_pairs_in(const Graph& g, std::span<const VertexLabel> set);

/// Removes the certificate's cut from `host` and checks the recorded components.
bool replay(const Graph& host, const VertexCutCertificate& cert);
bool replay(const Graph& host, const EdgeCutCertificate& cert);

}  // namespace gextra
