#include "pathbetti/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

#include "pathbetti/errors.hpp"

namespace pathbetti {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "[" + std::to_string(u) + "," + std::to_string(v) + "]";
}

}  // namespace

Graph::Graph(VertexSet vertices, std::vector<Edge> edges) : vertices_(std::move(vertices)) {
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("loop at edge " + pair_text(u, v));
    if (!vertices_.contains(u) || !vertices_.contains(v)) {
      throw InputError("edge " + pair_text(u, v) + " has an endpoint outside the vertex set");
    }
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(u, v), std::max(u, v)});
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Line: return "line";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::Star: return "star";
  }
  return "?";
}

Graph standard_graph(GraphFamily family, int size) {
  std::vector<Edge> edges;
  switch (family) {
    case GraphFamily::Line:
      if (size < 1) throw InputError("line order must be >= 1");
      for (int i = 1; i < size; ++i) edges.emplace_back(i, i + 1);
      return graph_from_edges(size, edges);
    case GraphFamily::Cycle:
      if (size < 3) throw InputError("cycle size must be >= 3");
      for (int i = 1; i <= size; ++i) edges.emplace_back(i, i % size + 1);
      return graph_from_edges(size, edges);
    case GraphFamily::Star:
      if (size < 1) throw InputError("star size must be >= 1");
      for (int i = 2; i <= size + 1; ++i) edges.emplace_back(1, i);
      return graph_from_edges(size + 1, edges);
  }
  throw InputError("unknown graph family");
}

Graph graph_from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError("edge " + pair_text(u, v) + " has an endpoint outside 1.." +
                       std::to_string(n));
    }
  }
  return Graph(VertexSet::range(1, n), edges);
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("graph JSON: missing integer field \"n\"");
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("graph JSON: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw InputError("graph JSON: every edge must be a pair of integers, got " + e.dump());
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return graph_from_edges(doc["n"].get<int>(), edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

Graph induced_subgraph(const Graph& g, const VertexSet& w) {
  const VertexSet kept = w.intersected(g.vertices());
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (kept.contains(u) && kept.contains(v)) edges.emplace_back(u, v);
  }
  return Graph(kept, std::move(edges));
}

std::vector<VertexSet> enumerate_t_paths(const Graph& g, int t) {
  if (t < 1) throw InputError("path length parameter t must be >= 1");
  std::set<VertexSet> supports;
  std::vector<Vertex> path;
  std::function<void()> extend = [&]() {
    if (static_cast<int>(path.size()) == t) {
      supports.insert(VertexSet(path));
      return;
    }
    for (Vertex w : g.neighbours(path.back())) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  };
  for (Vertex v : g.vertices()) {
    path.assign(1, v);
    extend();
  }
  return {supports.begin(), supports.end()};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::set<Vertex> unseen(g.vertices().begin(), g.vertices().end());
  while (!unseen.empty()) {
    std::vector<Vertex> comp, stack{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (unseen.erase(w)) stack.push_back(w);
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool has_isolated_vertex(const Graph& g) {
  return std::any_of(g.vertices().begin(), g.vertices().end(),
                     [&](Vertex v) { return g.degree(v) == 0; });
}

std::optional<std::vector<int>> line_decomposition(const Graph& g) {
  std::vector<int> orders;
  for (const VertexSet& comp : connected_components(g)) {
    std::size_t edges = 0;
    for (Vertex v : comp) {
      const std::size_t d = g.degree(v);
      if (d > 2) return std::nullopt;
      edges += d;
    }
    // A connected graph with max degree 2 is a path iff it is a tree.
    if (edges / 2 != comp.size() - 1) return std::nullopt;
    orders.push_back(static_cast<int>(comp.size()));
  }
  std::sort(orders.rbegin(), orders.rend());
  return orders;
}

}  // namespace pathbetti
