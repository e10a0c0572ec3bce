#pragma once

#include <vector>

#include "pathbetti/graph.hpp"
#include "pathbetti/simplicial_complex.hpp"

namespace pathbetti {

/// An equigenerated squarefree monomial ideal. Each generator is the support
/// of a monomial; all have the same size, so the list is a minimal
/// generating set. Generator k is Taylor vertex k.
struct MonomialIdeal {
  int ambient_n = 0;
  int degree = 0;
  std::vector<VertexSet> generators;

  bool is_zero() const { return generators.empty(); }
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// I_t(G), generators in the order of enumerate_t_paths.
MonomialIdeal path_ideal(const Graph& g, int t);

/// Support of the lcm of all generators; empty for the zero ideal.
VertexSet ideal_lcm(const MonomialIdeal& ideal);

/// Union of the supports of the Taylor face, i.e. lcm(τ) for τ ⊆ generator indices.
VertexSet taylor_face_lcm(const MonomialIdeal& ideal, const VertexSet& face);

/// Indices of the generators dividing m.
VertexSet generators_dividing(const MonomialIdeal& ideal, const VertexSet& m);

/// True iff m is the lcm of the generators that divide it.
bool is_lcm_closed(const MonomialIdeal& ideal, const VertexSet& m);

/// Θ_{<m}: Taylor faces whose lcm strictly divides m, on generator indices.
/// Facets are the maximal sets among F_x = {g : g divides m / x} for x in m.
/// Throws InputError when m does not divide lcm(I).
SimplicialComplex taylor_strict_sub(const MonomialIdeal& ideal, const VertexSet& m);

}  // namespace pathbetti
