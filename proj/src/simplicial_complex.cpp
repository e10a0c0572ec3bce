#include "pathbetti/simplicial_complex.hpp"

#include <algorithm>
#include <sstream>

#include "pathbetti/errors.hpp"

namespace pathbetti {

SimplicialComplex SimplicialComplex::irrelevant() { return make_complex({VertexSet{}}); }

SimplicialComplex SimplicialComplex::simplex(const VertexSet& face) {
  return make_complex({face});
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet out;
  for (const auto& f : facets_) out = out.united(f);
  return out;
}

int SimplicialComplex::dimension() const {
  int dim = -2;
  for (const auto& f : facets_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

bool SimplicialComplex::contains_face(const VertexSet& face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return face.is_subset_of(f); });
}

SimplicialComplex make_complex(std::vector<VertexSet> candidates, VertexSet universe) {
  for (const auto& c : candidates) {
    if (!c.empty() && c[0] < 0) {
      throw InputError("negative vertex label in facet {" + c.to_string() + "}");
    }
  }
  if (!universe.empty() && universe[0] < 0) throw InputError("negative vertex label");

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  SimplicialComplex k;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    bool maximal = true;
    for (std::size_t b = 0; b < candidates.size() && maximal; ++b) {
      if (a != b && candidates[a].is_proper_subset_of(candidates[b])) maximal = false;
    }
    if (maximal) k.facets_.push_back(candidates[a]);
  }
  k.universe_ = universe.united(k.vertices());
  return k;
}

namespace {

// Calls fn on every (size)-subset of `set`, in lexicographic order.
template <typename Fn>
void for_each_subset_of_size(const VertexSet& set, std::size_t size, Fn&& fn) {
  const std::size_t n = set.size();
  if (size > n) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t k = 0; k < size; ++k) idx[k] = k;
  std::vector<Vertex> buf(size);
  while (true) {
    for (std::size_t k = 0; k < size; ++k) buf[k] = set[idx[k]];
    fn(VertexSet(buf));
    std::size_t k = size;
    while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
    if (k == 0) return;
    ++idx[k - 1];
    for (std::size_t r = k; r < size; ++r) idx[r] = idx[r - 1] + 1;
  }
}

}  // namespace

std::vector<VertexSet> enumerate_faces(const SimplicialComplex& k, int p) {
  std::vector<VertexSet> out;
  if (p < -1 || k.is_void()) return out;
  const auto size = static_cast<std::size_t>(p + 1);
  for (const auto& f : k.facets()) {
    for_each_subset_of_size(f, size, [&](VertexSet s) { out.push_back(std::move(s)); });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexSet>> faces_by_dimension(const SimplicialComplex& k,
                                                       std::size_t cap) {
  std::vector<std::vector<VertexSet>> out;
  if (k.is_void()) return out;
  // A single facet with more than log2(cap) vertices already overflows.
  for (const auto& f : k.facets()) {
    if (f.size() >= 8 * sizeof(std::size_t) || (std::size_t{1} << f.size()) > cap) {
      throw SizeLimitError("complex has a facet with " + std::to_string(f.size()) +
                           " vertices; face cap is " + std::to_string(cap));
    }
  }
  const int dim = k.dimension();
  std::size_t total = 0;
  for (int p = -1; p <= dim; ++p) {
    out.push_back(enumerate_faces(k, p));
    total += out.back().size();
    if (total > cap) {
      throw SizeLimitError("complex has more than " + std::to_string(cap) + " faces");
    }
  }
  return out;
}

std::optional<Vertex> is_cone(const SimplicialComplex& k) {
  if (k.is_void()) throw InputError("is_cone: void complex");
  VertexSet common = k.facets().front();
  for (const auto& f : k.facets()) common = common.intersected(f);
  if (common.empty()) return std::nullopt;
  return common[0];
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexSet> c = a.facets();
  c.insert(c.end(), b.facets().begin(), b.facets().end());
  return make_complex(std::move(c), a.vertex_universe().united(b.vertex_universe()));
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<VertexSet> c;
  for (const auto& f : a.facets()) {
    for (const auto& g : b.facets()) c.push_back(f.intersected(g));
  }
  return make_complex(std::move(c));
}

SimplicialComplex omega_complex(int n, int t) {
  if (t < 1 || n < t) {
    throw InputError("omega_complex requires n >= t >= 1 (got n=" + std::to_string(n) +
                     ", t=" + std::to_string(t) + ")");
  }
  const VertexSet ground = VertexSet::range(1, n);
  std::vector<VertexSet> facets;
  for (int i = 1; i <= n - t + 1; ++i) {
    VertexSet f = ground;
    for (int v = i; v < i + t; ++v) f = f.without(v);
    facets.push_back(std::move(f));
  }
  return make_complex(std::move(facets), ground);
}

SimplicialComplex boundary_complex(int n) {
  if (n < 1) throw InputError("boundary_complex requires n >= 1");
  const VertexSet ground = VertexSet::range(1, n);
  std::vector<VertexSet> facets;
  for (int v = 1; v <= n; ++v) facets.push_back(ground.without(v));
  return make_complex(std::move(facets), ground);
}

std::optional<std::vector<Vertex>> facet_vertex_matching(const SimplicialComplex& k) {
  const auto& facets = k.facets();
  const std::size_t q = facets.size();
  if (q < 2 || is_cone(k)) return std::nullopt;

  // Admissible vertices for slot i: outside F_i, inside every other facet.
  const VertexSet verts = k.vertices();
  std::vector<std::vector<Vertex>> admissible(q);
  for (std::size_t i = 0; i < q; ++i) {
    for (Vertex v : verts) {
      bool ok = !facets[i].contains(v);
      for (std::size_t j = 0; j < q && ok; ++j) {
        if (j != i && !facets[j].contains(v)) ok = false;
      }
      if (ok) admissible[i].push_back(v);
    }
  }

  // Kuhn's augmenting-path matching of slots to distinct vertices.
  std::vector<std::optional<std::size_t>> owner_of(verts.size());
  auto vertex_index = [&](Vertex v) {
    return static_cast<std::size_t>(
        std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<bool> seen;
  auto augment = [&](auto&& self, std::size_t slot) -> bool {
    for (Vertex v : admissible[slot]) {
      const std::size_t vi = vertex_index(v);
      if (seen[vi]) continue;
      seen[vi] = true;
      if (!owner_of[vi] || self(self, *owner_of[vi])) {
        owner_of[vi] = slot;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < q; ++i) {
    seen.assign(verts.size(), false);
    if (!augment(augment, i)) return std::nullopt;
  }

  std::vector<Vertex> out(q);
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    if (owner_of[vi]) out[*owner_of[vi]] = verts[vi];
  }
  return out;
}

std::string dump(const SimplicialComplex& k) {
  std::string s;
  for (const auto& f : k.facets()) s += f.to_string() + '\n';
  return s;
}

SimplicialComplex parse_complex(const std::string& text) {
  std::vector<VertexSet> facets;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Vertex> vs;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(0, tok.find_first_not_of(" \t"));
      tok.erase(tok.find_last_not_of(" \t") + 1);
      if (tok.empty()) continue;
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (const std::exception&) {
        throw InputError("bad vertex label '" + tok + "'");
      }
      if (used != tok.size() || v < 0) throw InputError("bad vertex label '" + tok + "'");
      vs.push_back(static_cast<Vertex>(v));
    }
    facets.emplace_back(std::move(vs));
    pos = eol + 1;
  }
  return make_complex(std::move(facets));
}

}  // namespace pathbetti
