#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pathbetti/betti.hpp"
#include "pathbetti/graph.hpp"

namespace pathbetti {

using BigInt = boost::multiprecision::cpp_int;

/// C(a, b), with C(a, b) = 0 whenever a < 0, b < 0 or b > a.
BigInt binomial(std::int64_t a, std::int64_t b);

/// For a multidegree of total degree j in homological index i, the number of
/// induced lines of order t (mod t+1) and the number of (t+1)-vertex blocks
/// that the line counting argument requires:
///   short_lines = (i(t+1) - 2j) / (1 - t),  blocks = (j - ti) / (1 - t).
/// They satisfy i = short_lines + 2 blocks and j = t short_lines + (t+1) blocks.
struct LineCounts {
  std::int64_t short_lines;
  std::int64_t blocks;
};

/// Nothing unless both quotients are nonnegative integers. Requires t >= 2.
std::optional<LineCounts> line_counts(int t, int i, int j);

/// dim H̃_p(Ω_t^n) for every p with nonzero homology. Requires n >= t >= 1.
std::map<int, std::uint64_t> omega_homology_dims_formula(int n, int t);

/// b_{i,n}(S/I_t(L_n)), i >= 1.
BigInt line_top_betti_formula(int n, int t, int i);

/// b_{i,W}(S/I_t(L_n)) where the induced subgraph on W is a disjoint union of
/// lines with the given orders (so j = sum of orders).
BigInt line_multigraded_formula(const std::vector<int>& component_orders, int t, int i);

/// b_{i,j}(S/I_t(L_n)), i >= 1.
BigInt line_graded_formula(int n, int t, int i, int j);

/// b_{i,j}(S/I_t(C_n)) for j < n, i >= 1. Throws InputError when j >= n.
BigInt cycle_graded_formula(int n, int t, int i, int j);

/// b_{i,j}(S/I_t(S_n)) for t in {2, 3}, n >= 2. Throws UnsupportedError for
/// any other t.
BigInt star_graded_formula(int n, int t, int i, int j);

/// A closed-form Betti table. Entries with j >= degree_bound are not covered
/// by a formula and are absent from `table`.
struct FormulaTable {
  BettiTable table;
  int degree_bound = 0;
};

/// Throws UnsupportedError when no closed form covers (family, t), and
/// InputError when n is out of range for the family.
FormulaTable formula_betti_table(GraphFamily family, int n, int t);

namespace detail {

/// The line and cycle products evaluated with the binomial zero convention
/// alone, without the explicit side conditions. Used to check that the two
/// agree.
BigInt line_graded_unguarded(int n, int t, int i, int j);
BigInt cycle_graded_unguarded(int n, int t, int i, int j);

}  // namespace detail

}  // namespace pathbetti
