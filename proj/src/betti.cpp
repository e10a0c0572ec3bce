#include "pathbetti/betti.hpp"

#include <algorithm>
#include <numeric>

#include "pathbetti/errors.hpp"

namespace pathbetti {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t b) {
  if (b != 0) entries_[{i, j}] += b;
}

BettiTable BettiTable::restricted_to_degrees_below(int bound) const {
  BettiTable out;
  out.ambient_n_ = ambient_n_;
  for (const auto& [key, b] : entries_) {
    if (key.second < bound) out.entries_.emplace(key, b);
  }
  return out;
}

int BettiTable::max_degree() const {
  int j = 0;
  for (const auto& [key, b] : entries_) j = std::max(j, key.second);
  return j;
}

int BettiTable::max_index() const {
  int i = 0;
  for (const auto& [key, b] : entries_) i = std::max(i, key.first);
  return i;
}

BettiVector multigraded_betti(const MonomialIdeal& ideal, const VertexSet& m,
                              std::uint32_t prime, std::size_t face_cap) {
  if (m.empty()) return {{0, 1}};
  if (!is_lcm_closed(ideal, m)) return {};
  const HomologyProfile h = reduced_homology_dims(taylor_strict_sub(ideal, m), prime, face_cap);
  BettiVector out;
  for (auto [p, dim] : h.support()) out[p + 2] = dim;
  return out;
}

namespace {

constexpr std::size_t kMaxSupport = 24;

// Vertex-label-independent colour refinement; returns one colour per vertex
// position in g.vertices().
std::vector<int> refined_colours(const Graph& g) {
  const auto& vs = g.vertices();
  const std::size_t k = vs.size();
  std::vector<std::vector<std::size_t>> nbr(k);
  for (auto [u, v] : g.edges()) {
    const auto a = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), u) - vs.begin());
    const auto b = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    nbr[a].push_back(b);
    nbr[b].push_back(a);
  }
  std::vector<int> colour(k, 0);
  for (std::size_t round = 0; round <= k; ++round) {
    std::vector<std::vector<int>> sig(k);
    for (std::size_t v = 0; v < k; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (std::size_t w : nbr[v]) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(k);
    for (std::size_t v = 0; v < k; ++v) {
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                 distinct.begin());
    }
    const bool stable = next == colour;
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

}  // namespace

std::vector<int> canonical_key(const Graph& g) {
  const auto& vs = g.vertices();
  const std::size_t k = vs.size();
  const std::vector<int> colour = refined_colours(g);

  // Positions grouped by colour; permutations within a group are searched.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> groups;  // [begin, end) in order
  for (std::size_t s = 0; s < k;) {
    std::size_t e = s;
    while (e < k && colour[order[e]] == colour[order[s]]) ++e;
    groups.emplace_back(s, e);
    s = e;
  }
  double permutations = 1;
  for (auto [s, e] : groups) {
    for (std::size_t f = 2; f <= e - s; ++f) permutations *= static_cast<double>(f);
  }

  auto edges_under = [&](const std::vector<std::size_t>& ord) {
    std::vector<std::size_t> pos(k);
    for (std::size_t p = 0; p < k; ++p) pos[ord[p]] = p;
    std::vector<int> flat;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
      auto a = static_cast<int>(pos[std::lower_bound(vs.begin(), vs.end(), u) - vs.begin()]);
      auto b = static_cast<int>(pos[std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()]);
      es.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(es.begin(), es.end());
    for (auto [a, b] : es) {
      flat.push_back(a);
      flat.push_back(b);
    }
    return flat;
  };

  std::vector<int> key{static_cast<int>(k)};
  if (permutations > 5040) {
    // Too many relabelings: fall back to the order-preserving one, tagged so
    // it never collides with a searched form.
    key.push_back(-1);
    std::vector<std::size_t> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    auto flat = edges_under(identity);
    key.insert(key.end(), flat.begin(), flat.end());
    return key;
  }

  key.push_back(-2);
  for (std::size_t p = 0; p < k; ++p) key.push_back(colour[order[p]]);
  std::vector<int> best;
  bool have_best = false;
  // Odometer over the permutations of every colour group.
  while (true) {
    auto flat = edges_under(order);
    if (!have_best || flat < best) {
      best = std::move(flat);
      have_best = true;
    }
    std::size_t gi = 0;
    for (; gi < groups.size(); ++gi) {
      auto [s, e] = groups[gi];
      if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(s),
                                order.begin() + static_cast<std::ptrdiff_t>(e))) {
        break;
      }
    }
    if (gi == groups.size()) break;
  }
  key.insert(key.end(), best.begin(), best.end());
  return key;
}

namespace {

template <typename Visit>
void for_each_nonzero(const Graph& g, int t, const OracleOptions& opts, Visit&& visit) {
  const MonomialIdeal ideal = path_ideal(g, t);
  const VertexSet support = ideal_lcm(ideal);
  if (support.size() > kMaxSupport) {
    throw SizeLimitError("lcm support has " + std::to_string(support.size()) +
                         " vertices; subset enumeration is limited to " +
                         std::to_string(kMaxSupport));
  }
  const std::size_t s = support.size();
  std::vector<std::uint32_t> gen_masks;
  for (const auto& gen : ideal.generators) {
    std::uint32_t mask = 0;
    for (Vertex v : gen) {
      mask |= std::uint32_t{1} << (std::lower_bound(support.begin(), support.end(), v) -
                                   support.begin());
    }
    gen_masks.push_back(mask);
  }

  std::map<std::vector<int>, BettiVector> memo;
  // Largest multidegrees first, so an oversized complex fails fast.
  for (std::uint32_t w = (std::uint32_t{1} << s) - 1;; --w) {
    // Skip W unless it is the union of the generators it contains.
    std::uint32_t covered = 0;
    for (std::uint32_t gm : gen_masks) {
      if ((gm & ~w) == 0) covered |= gm;
    }
    if (covered != w) {
      if (w == 0) break;
      continue;
    }

    std::vector<Vertex> members;
    for (std::size_t b = 0; b < s; ++b) {
      if (w >> b & 1) members.push_back(support[b]);
    }
    const VertexSet m(std::move(members));
    BettiVector vec;
    if (opts.memo) {
      auto key = canonical_key(induced_subgraph(g, m));
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(std::move(key), multigraded_betti(ideal, m, opts.prime, opts.face_cap))
                 .first;
      }
      vec = it->second;
    } else {
      vec = multigraded_betti(ideal, m, opts.prime, opts.face_cap);
    }
    for (auto [i, b] : vec) visit(i, m, b);
    if (w == 0) break;
  }
}

}  // namespace

MultigradedRecord multigraded_record(const Graph& g, int t, const OracleOptions& opts) {
  MultigradedRecord out;
  for_each_nonzero(g, t, opts, [&](int i, const VertexSet& m, std::uint64_t b) {
    out[{i, m}] = b;
  });
  return out;
}

BettiTable graded_betti_table(const Graph& g, int t, const OracleOptions& opts) {
  BettiTable out(static_cast<int>(g.order()));
  for_each_nonzero(g, t, opts, [&](int i, const VertexSet& m, std::uint64_t b) {
    if (!m.empty()) out.add(i, static_cast<int>(m.size()), b);
  });
  return out;
}

BettiVector top_betti_vector(const Graph& g, int t, std::uint32_t prime) {
  return multigraded_betti(path_ideal(g, t), g.vertices(), prime);
}

BettiVector top_betti_product(const std::vector<BettiVector>& component_vectors) {
  BettiVector acc{{0, 1}};
  for (const auto& vec : component_vectors) {
    BettiVector next;
    for (auto [i, a] : acc) {
      for (auto [u, b] : vec) {
        if (a != 0 && b != 0) next[i + u] += a * b;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace pathbetti
