#pragma once

#include <string>
#include <vector>

#include "gextra/graph.hpp"
#include "gextra/products.hpp"

namespace gextra {

/// Largest order enumerate_connected_base_graphs accepts.
inline constexpr std::size_t kCorpusMaxOrder = 7;

/// Relabelling of g (Base labels 0..n-1) that minimises the graph6 string
/// among orders compatible with colour refinement. Isomorphic inputs of
/// order <= 9 map to the same graph.
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);

/// All connected graphs on 2..max_n vertices up to isomorphism, in canonical
/// form, ordered by order then graph6.
std::vector<Graph> enumerate_connected_base_graphs(std::size_t max_n);

/// Connected non-complete graphs on 3..max_n vertices.
std::vector<Graph> default_base_corpus(std::size_t max_n = 5);

/// K1, K2, P3, C3, each rooted at vertex 0 (an endpoint for P3).
std::vector<RootedGraph> default_attachments();

}  // namespace gextra
