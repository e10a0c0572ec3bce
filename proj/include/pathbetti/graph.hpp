#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathbetti/vertex_set.hpp"

namespace pathbetti {

using Edge = std::pair<Vertex, Vertex>;

/// A simple undirected graph. Edges are stored with u < v, sorted, and
/// deduplicated. Vertex labels are kept as given (induced subgraphs do not
/// renumber).
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on a loop or an endpoint outside `vertices`.
  Graph(VertexSet vertices, std::vector<Edge> edges);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  /// Neighbours of v in ascending order.
  std::vector<Vertex> neighbours(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbours(v).size(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  VertexSet vertices_;
  std::vector<Edge> edges_;
};

enum class GraphFamily { Line, Cycle, Star };

std::string to_string(GraphFamily family);

/// L_n has n vertices; C_n has n vertices and n edges; S_n has n + 1
/// vertices with centre 1 joined to 2..n+1. Throws InputError when the size
/// is out of range (line/star n >= 1, cycle n >= 3).
Graph standard_graph(GraphFamily family, int size);

/// Graph on vertices 1..n. Throws InputError naming the offending pair on a
/// loop or out-of-range endpoint.
Graph graph_from_edges(int n, const std::vector<Edge>& edges);

/// Parses {"n": <int>, "edges": [[u, v], ...]}. Throws InputError.
Graph graph_from_json(const std::string& text);
std::string graph_to_json(const Graph& g);

/// Vertices of g inside w together with all edges of g between them.
Graph induced_subgraph(const Graph& g, const VertexSet& w);

/// Supports of all paths on t distinct vertices, deduplicated and sorted
/// lexicographically. t = 1 gives every singleton.
std::vector<VertexSet> enumerate_t_paths(const Graph& g, int t);

/// Connected components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Orders of the components, sorted descending, when every component is a
/// path graph; nothing otherwise.
std::optional<std::vector<int>> line_decomposition(const Graph& g);

}  // namespace pathbetti
