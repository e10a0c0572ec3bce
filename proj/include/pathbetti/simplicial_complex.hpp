#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pathbetti/vertex_set.hpp"

namespace pathbetti {

/// Upper bound on the number of faces (empty face included) that face
/// expansion will materialize.
inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 16;

/// An abstract simplicial complex stored by its facets.
///
/// Facets form an antichain kept in lexicographic order. The void complex
/// (no faces at all) has no facets; the irrelevant complex {∅} has the single
/// facet ∅. These are distinct values with distinct homology.
///
/// The vertex universe is bookkeeping only: it may name labels that appear in
/// no facet (e.g. the ground set of an Ω complex). Equality ignores it.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex irrelevant();
  static SimplicialComplex simplex(const VertexSet& face);

  const std::vector<VertexSet>& facets() const { return facets_; }
  const VertexSet& vertex_universe() const { return universe_; }
  /// Labels lying in at least one facet.
  VertexSet vertices() const;

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front().empty(); }
  /// Largest facet size minus one; -1 for {∅}; -2 for the void complex.
  int dimension() const;

  bool contains_face(const VertexSet& face) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  friend SimplicialComplex make_complex(std::vector<VertexSet>, VertexSet);

  std::vector<VertexSet> facets_;
  VertexSet universe_;
};

/// Complex generated by the candidates: duplicates and non-maximal sets are
/// dropped. Empty input gives the void complex, [∅] the irrelevant one.
/// Throws InputError on a negative label.
SimplicialComplex make_complex(std::vector<VertexSet> candidates, VertexSet universe = {});

/// Faces with exactly p+1 vertices in lexicographic order. p = -1 yields [∅]
/// for any non-void complex.
std::vector<VertexSet> enumerate_faces(const SimplicialComplex& k, int p);

/// All faces grouped by dimension: result[d + 1] holds the d-faces for
/// d = -1 .. dim K, each list lexicographic. Empty for the void complex.
/// Throws SizeLimitError once more than `cap` faces would be produced.
std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& k,
                                                       std::size_t cap = kDefaultFaceCap);

/// Smallest vertex lying in every facet, if any. Throws InputError on void.
std::optional<Vertex> is_cone(const SimplicialComplex& k);

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

/// Ω_t^n: facets {1..n} minus each window {i, ..., i+t-1}, i = 1..n-t+1.
/// Requires n >= t >= 1.
SimplicialComplex omega_complex(int n, int t);

/// Boundary of the simplex on {1..n}: all (n-1)-subsets. n = 1 gives {∅}.
SimplicialComplex boundary_complex(int n);

/// Distinct vertices v_1..v_q with v_i ∉ F_j exactly when i = j, where
/// F_1..F_q are the facets in stored order. Empty when K is a cone, has
/// fewer than two facets, or no such sequence exists.
std::optional<std::vector<Vertex>> facet_vertex_matching(const SimplicialComplex& k);

/// One facet per line, vertices comma-separated, facets in stored order.
std::string dump(const SimplicialComplex& k);

/// Inverse of dump(): each newline-terminated line is a facet; an empty line
/// is the empty facet. Throws InputError on a malformed label.
SimplicialComplex parse_complex(const std::string& text);

}  // namespace pathbetti
