#pragma once

#include <vector>

#include "gextra/graph.hpp"

namespace gextra {

struct RootedGraph {
  Graph graph;
  VertexIndex root = 0;

  RootedGraph(Graph g, VertexIndex r);
};

struct GeneralizedCoronaSpec {
  Graph base;
  std::vector<Graph> attachments;  // one per base vertex

  /// Throws InputError on length mismatch or an empty attachment.
  GeneralizedCoronaSpec(Graph g, std::vector<Graph> hs);
  /// Same attachment on every base vertex.
  static GeneralizedCoronaSpec uniform(Graph g, const Graph& h);
};

// Every constructor lays out vertices canonically: Base vertices in base order,
// then Sub vertices in edge order, then Copy vertices by owner, then inner index.
// H may be disconnected or edgeless; theorem hypotheses are checked elsewhere.

/// G ⋄ H: a copy of H per edge of G, joined to both of its endpoints.
Graph edge_corona(const Graph& g, const Graph& h);

/// G * H: a copy of H per vertex u, joined to every neighbour of u.
Graph neighbourhood_corona(const Graph& g, const Graph& h);

/// G ⊡ H: S(G) plus a copy of H per vertex v, joined to the subdivision
/// vertices on the edges at v.
Graph subdivision_vertex_nc(const Graph& g, const Graph& h);

/// G ⊟ H: S(G) plus a copy of H per edge e=uv, joined to u and v (the
/// neighbours of the subdivision vertex of e).
Graph subdivision_edge_nc(const Graph& g, const Graph& h);

/// G ∘ ∧H_i: attachment H_i fully joined to base vertex i.
Graph generalized_corona(const GeneralizedCoronaSpec& spec);

/// H(G): one copy of H per vertex of G; root copies are wired like G.
/// Root copies carry the Base label, other copy vertices Copy(owner, h).
Graph rooted_product(const Graph& g, const RootedGraph& h);

}  // namespace gextra
