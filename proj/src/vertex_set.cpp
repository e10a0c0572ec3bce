#include "pathbetti/vertex_set.hpp"

#include <algorithm>
#include <iterator>

namespace pathbetti {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex lo, Vertex hi) {
  std::vector<Vertex> vs;
  for (Vertex v = lo; v <= hi; ++v) vs.push_back(v);
  return VertexSet(std::move(vs));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

VertexSet VertexSet::united(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersected(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet out;
  std::copy_if(members_.begin(), members_.end(), std::back_inserter(out.members_),
               [v](Vertex u) { return u != v; });
  return out;
}

VertexSet VertexSet::with(Vertex v) const {
  VertexSet out = *this;
  auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
  if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(members_[k]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << '{' << s.to_string() << '}';
}

}  // namespace pathbetti
