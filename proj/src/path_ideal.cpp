#include "pathbetti/path_ideal.hpp"

#include "pathbetti/errors.hpp"

namespace pathbetti {

MonomialIdeal path_ideal(const Graph& g, int t) {
  MonomialIdeal ideal;
  ideal.ambient_n = static_cast<int>(g.order());
  ideal.degree = t;
  ideal.generators = enumerate_t_paths(g, t);
  return ideal;
}

VertexSet ideal_lcm(const MonomialIdeal& ideal) {
  VertexSet out;
  for (const auto& g : ideal.generators) out = out.united(g);
  return out;
}

VertexSet taylor_face_lcm(const MonomialIdeal& ideal, const VertexSet& face) {
  VertexSet out;
  for (Vertex k : face) out = out.united(ideal.generators.at(static_cast<std::size_t>(k)));
  return out;
}

VertexSet generators_dividing(const MonomialIdeal& ideal, const VertexSet& m) {
  std::vector<Vertex> idx;
  for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
    if (ideal.generators[k].is_subset_of(m)) idx.push_back(static_cast<Vertex>(k));
  }
  return VertexSet(std::move(idx));
}

bool is_lcm_closed(const MonomialIdeal& ideal, const VertexSet& m) {
  return taylor_face_lcm(ideal, generators_dividing(ideal, m)) == m;
}

SimplicialComplex taylor_strict_sub(const MonomialIdeal& ideal, const VertexSet& m) {
  if (!m.is_subset_of(ideal_lcm(ideal))) {
    throw InputError("multidegree {" + m.to_string() + "} does not divide the ideal's lcm");
  }
  const VertexSet dividing = generators_dividing(ideal, m);
  std::vector<VertexSet> candidates;
  for (Vertex x : m) {
    std::vector<Vertex> avoiding;
    for (Vertex k : dividing) {
      if (!ideal.generators[static_cast<std::size_t>(k)].contains(x)) avoiding.push_back(k);
    }
    candidates.emplace_back(std::move(avoiding));
  }
  return make_complex(std::move(candidates), dividing);
}

}  // namespace pathbetti
