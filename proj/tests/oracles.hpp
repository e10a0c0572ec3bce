#pragma once
// Test-only reference computations. Nothing here calls into the library's
// face enumeration, boundary matrices, rank routine or Taylor construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Face = std::vector<int>;

// Dense rank mod p by textbook row reduction.
inline std::size_t dense_rank(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::int64_t inv = 1, base = ((a[rank][c] % p) + p) % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const std::int64_t f = ((a[r][c] % p) + p) % p * inv % p;
      if (!f) continue;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// All faces of the complex generated by `facets`, via bitmasks over each facet.
inline std::set<Face> all_faces(const std::vector<Face>& facets) {
  std::set<Face> out;
  for (const Face& f : facets) {
    for (std::uint32_t mask = 0; mask < (1u << f.size()); ++mask) {
      Face s;
      for (std::size_t b = 0; b < f.size(); ++b) {
        if (mask >> b & 1) s.push_back(f[b]);
      }
      out.insert(s);
    }
  }
  return out;
}

// Reduced homology dims (degree -> dim, nonzero only) of the complex whose
// faces are `faces` (must be closed under subsets).
inline std::map<int, std::size_t> homology_of_faces(const std::set<Face>& faces, std::int64_t p) {
  std::map<int, std::vector<Face>> by_dim;
  for (const Face& f : faces) by_dim[static_cast<int>(f.size()) - 1].push_back(f);
  if (by_dim.empty()) return {};
  const int top = by_dim.rbegin()->first;
  std::map<int, std::size_t> rank;  // rank of d: C_d -> C_{d-1}
  for (int d = 0; d <= top; ++d) {
    const auto& hi = by_dim[d];
    const auto& lo = by_dim[d - 1];
    std::vector<std::vector<std::int64_t>> m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
    for (std::size_t c = 0; c < hi.size(); ++c) {
      for (std::size_t k = 0; k < hi[c].size(); ++k) {
        Face sub = hi[c];
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
        const auto r = std::find(lo.begin(), lo.end(), sub) - lo.begin();
        m[static_cast<std::size_t>(r)][c] = k % 2 ? p - 1 : 1;
      }
    }
    rank[d] = dense_rank(m, p);
  }
  std::map<int, std::size_t> out;
  for (int d = -1; d <= top; ++d) {
    const std::size_t dim = by_dim[d].size() - rank[d] - rank[d + 1];
    if (dim) out[d] = dim;
  }
  return out;
}

inline std::map<int, std::size_t> homology(const std::vector<Face>& facets, std::int64_t p) {
  if (facets.empty()) return {};
  return homology_of_faces(all_faces(facets), p);
}

// Θ_{<m} straight from the definition: subsets of the generators whose
// union is a proper subset of m. Faces are generator indices.
inline std::set<Face> taylor_strict_faces(const std::vector<Face>& gens, const Face& m) {
  std::set<Face> out;
  const std::size_t s = gens.size();
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    std::set<int> lcm;
    Face face;
    for (std::size_t b = 0; b < s; ++b) {
      if (mask >> b & 1) {
        face.push_back(static_cast<int>(b));
        lcm.insert(gens[b].begin(), gens[b].end());
      }
    }
    const bool inside = std::all_of(lcm.begin(), lcm.end(), [&](int v) {
      return std::find(m.begin(), m.end(), v) != m.end();
    });
    if (inside && lcm.size() < m.size()) out.insert(face);
  }
  return out;
}

// Maximal runs of consecutive members of w in 1..n; `cyclic` joins n and 1.
// w must be sorted and, when cyclic, a proper subset.
inline std::vector<int> run_lengths(const std::vector<int>& w, int n, bool cyclic) {
  std::vector<int> runs;
  std::vector<bool> in(static_cast<std::size_t>(n) + 2, false);
  for (int v : w) in[static_cast<std::size_t>(v)] = true;
  int start = 1;
  if (cyclic) {
    while (start <= n && in[static_cast<std::size_t>(start)]) ++start;  // first gap
  }
  int len = 0;
  for (int k = 0; k < n; ++k) {
    int v = (start - 1 + k) % n + 1;
    if (!cyclic) v = k + 1;
    if (in[static_cast<std::size_t>(v)]) {
      ++len;
    } else if (len) {
      runs.push_back(len);
      len = 0;
    }
  }
  if (len) runs.push_back(len);
  return runs;
}

// Number of size-j vertex sets of L_n (or C_n, j < n) whose runs satisfy the
// disjoint-lines counting rule for index i: every run has order 0 or t mod
// t+1 and exactly (i(t+1) - 2j)/(1 - t) runs have order t mod t+1.
inline std::uint64_t count_line_collections(int n, int t, int i, int j, bool cyclic) {
  const std::int64_t num = static_cast<std::int64_t>(i) * (t + 1) - 2 * j;
  const std::int64_t den = 1 - t;
  if (num % den != 0 || num / den < 0) return 0;
  const std::int64_t want = num / den;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    std::vector<int> w;
    for (int b = 0; b < n; ++b) {
      if (mask >> b & 1) w.push_back(b + 1);
    }
    bool ok = true;
    std::int64_t short_runs = 0;
    for (int len : run_lengths(w, n, cyclic)) {
      const int r = len % (t + 1);
      if (r != 0 && r != t) ok = false;
      if (r == t) ++short_runs;
    }
    if (ok && short_runs == want) ++count;
  }
  return count;
}

}  // namespace oracle
