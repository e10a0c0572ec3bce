#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace pathbetti {

using Vertex = int;

/// A finite set of nonnegative vertex labels, stored sorted and deduplicated.
///
/// Doubles as the support of a squarefree monomial: the monomial
/// x_{v1} x_{v2} ... is represented by the set {v1, v2, ...}.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  /// Builds {lo, lo+1, ..., hi}; empty when hi < lo.
  static VertexSet range(Vertex lo, Vertex hi);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t k) const { return members_[k]; }

  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;
  bool is_proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
  }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet without(Vertex v) const;
  VertexSet with(Vertex v) const;

  /// "1,2,3" (empty string for the empty set).
  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace pathbetti
