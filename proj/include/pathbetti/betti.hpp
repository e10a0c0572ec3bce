#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "pathbetti/graph.hpp"
#include "pathbetti/homology.hpp"
#include "pathbetti/path_ideal.hpp"

namespace pathbetti {

/// Graded Betti numbers b_{i,j}(S/I), zeros omitted. (0,0) = 1 always.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int ambient_n) : ambient_n_(ambient_n) { add(0, 0, 1); }

  int ambient_n() const { return ambient_n_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(int i, int j) const;
  /// Accumulates into (i, j); adding 0 is a no-op.
  void add(int i, int j, std::uint64_t b);
  /// Entries with total degree j < bound.
  BettiTable restricted_to_degrees_below(int bound) const;
  int max_degree() const;
  int max_index() const;

  /// Entrywise; ambient_n is not compared.
  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  int ambient_n_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// i -> b_{i,m} for one multidegree m; zeros omitted.
using BettiVector = std::map<int, std::uint64_t>;

/// (i, W) -> b_{i,W}(S/I); zeros omitted.
using MultigradedRecord = std::map<std::pair<int, VertexSet>, std::uint64_t>;

struct OracleOptions {
  std::uint32_t prime = kDefaultPrime;
  /// Cache b_{i,W} by the isomorphism class of the induced subgraph G_W.
  bool memo = false;
  std::size_t face_cap = kDefaultFaceCap;
};

/// b_{i,m}(S/I) = dim H̃_{i-2}(Θ_{<m}) when m is lcm-closed, 0 otherwise.
/// The empty multidegree gives {0: 1}.
BettiVector multigraded_betti(const MonomialIdeal& ideal, const VertexSet& m,
                              std::uint32_t prime = kDefaultPrime,
                              std::size_t face_cap = kDefaultFaceCap);

/// Every nonzero b_{i,W}(S/I_t(G)) with W ranging over subsets of lcm(I_t(G)).
MultigradedRecord multigraded_record(const Graph& g, int t, const OracleOptions& opts = {});

/// b_{i,j}(S/I_t(G)) as sums of multigraded Betti numbers over |W| = j.
BettiTable graded_betti_table(const Graph& g, int t, const OracleOptions& opts = {});

/// Top-grade vector of I_t(G): i -> b_{i,V(G)}(S/I_t(G)).
BettiVector top_betti_vector(const Graph& g, int t, std::uint32_t prime = kDefaultPrime);

/// Convolution of top-grade vectors of ideals in disjoint variables.
BettiVector top_betti_product(const std::vector<BettiVector>& component_vectors);

/// Isomorphism-invariant key of a graph, exact: two graphs share a key only
/// if they are isomorphic. Used for memoisation.
std::vector<int> canonical_key(const Graph& g);

}  // namespace pathbetti
