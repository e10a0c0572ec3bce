#include "pathbetti/formulas.hpp"

#include <limits>
#include <string>

#include "pathbetti/errors.hpp"

namespace pathbetti {

namespace {

void require_t_at_least_two(int t) {
  if (t < 2) throw InputError("closed forms need t >= 2 (got t=" + std::to_string(t) + ")");
}

std::uint64_t to_count(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw SizeLimitError("Betti number does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

// Exact nonnegative quotient num / den, if any.
std::optional<std::int64_t> exact_quotient(std::int64_t num, std::int64_t den) {
  if (den == 0 || num % den != 0) return std::nullopt;
  const std::int64_t q = num / den;
  if (q < 0) return std::nullopt;
  return q;
}

}  // namespace

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::int64_t k = 1; k <= b; ++k) {
    result *= a - b + k;
    result /= k;
  }
  return result;
}

std::optional<LineCounts> line_counts(int t, int i, int j) {
  require_t_at_least_two(t);
  const std::int64_t den = 1 - std::int64_t{t};
  auto short_lines = exact_quotient(std::int64_t{i} * (t + 1) - 2 * std::int64_t{j}, den);
  auto blocks = exact_quotient(std::int64_t{j} - std::int64_t{t} * i, den);
  if (!short_lines || !blocks) return std::nullopt;
  return LineCounts{*short_lines, *blocks};
}

std::map<int, std::uint64_t> omega_homology_dims_formula(int n, int t) {
  if (t < 1 || n < t) throw InputError("omega formula requires n >= t >= 1");
  const int period = t + 1;
  if (n % period == 0) return {{2 * n / period - 2, 1}};
  if (n % period == t) return {{2 * (n + 1) / period - 3, 1}};
  return {};
}

BigInt line_top_betti_formula(int n, int t, int i) {
  require_t_at_least_two(t);
  const int period = t + 1;
  if (n % period == 0) return i * period == 2 * n ? 1 : 0;
  if (n % period == t) return (i + 1) * period == 2 * n + 2 ? 1 : 0;
  return 0;
}

BigInt line_multigraded_formula(const std::vector<int>& component_orders, int t, int i) {
  require_t_at_least_two(t);
  int j = 0;
  std::int64_t residue_t = 0;
  for (int order : component_orders) {
    if (order < 1) throw InputError("line orders must be positive");
    const int r = order % (t + 1);
    if (r != 0 && r != t) return 0;
    if (r == t) ++residue_t;
    j += order;
  }
  const auto expected = exact_quotient(std::int64_t{i} * (t + 1) - 2 * std::int64_t{j},
                                       1 - std::int64_t{t});
  return expected && *expected == residue_t ? 1 : 0;
}

namespace detail {

BigInt line_graded_unguarded(int n, int t, int i, int j) {
  const auto c = line_counts(t, i, j);
  if (!c) return 0;
  return binomial(n - j + 1, c->short_lines) * binomial(n - j + c->blocks, n - j);
}

BigInt cycle_graded_unguarded(int n, int t, int i, int j) {
  const auto c = line_counts(t, i, j);
  if (!c || j >= n) return 0;
  const BigInt numerator =
      n * binomial(n - j, c->short_lines) * binomial(n - j - 1 + c->blocks, n - j - 1);
  return numerator / (n - j);
}

}  // namespace detail

BigInt line_graded_formula(int n, int t, int i, int j) {
  require_t_at_least_two(t);
  const auto c = line_counts(t, i, j);
  if (!c) return 0;
  const std::int64_t a = c->short_lines;
  if (!(n >= j && j >= t * a && n - j >= a - 1)) return 0;
  return binomial(n - j + 1, a) * binomial(n - j + c->blocks, n - j);
}

BigInt cycle_graded_formula(int n, int t, int i, int j) {
  require_t_at_least_two(t);
  if (j >= n) {
    throw InputError("cycle closed form covers j < n only (got j=" + std::to_string(j) +
                     ", n=" + std::to_string(n) + ")");
  }
  const auto c = line_counts(t, i, j);
  if (!c) return 0;
  const std::int64_t a = c->short_lines;
  if (!(n - 1 >= j && j >= t * a && n - j >= a)) return 0;
  const BigInt numerator =
      n * binomial(n - j, a) * binomial(n - j - 1 + c->blocks, n - j - 1);
  // Each circular arrangement is counted once per fixed point.
  if (numerator % (n - j) != 0) {
    throw std::logic_error("cycle closed form: n/(n-j) factor left a remainder");
  }
  return numerator / (n - j);
}

BigInt star_graded_formula(int n, int t, int i, int j) {
  if (t != 2 && t != 3) {
    throw UnsupportedError("star closed form exists for t in {2,3} only (got t=" +
                           std::to_string(t) + ")");
  }
  if (n < 2) throw InputError("star closed form requires n >= 2");
  if (j > n + 1) return 0;
  if (t == 2) return i == j - 1 ? binomial(n, j - 1) : BigInt{0};
  return i == j - 2 ? i * binomial(n, j - 1) : BigInt{0};
}

FormulaTable formula_betti_table(GraphFamily family, int n, int t) {
  FormulaTable out;
  switch (family) {
    case GraphFamily::Line:
      if (t < 2) throw UnsupportedError("line closed form needs t >= 2");
      if (n < 1) throw InputError("line order must be >= 1");
      out.degree_bound = n + 1;
      break;
    case GraphFamily::Cycle:
      if (t < 2) throw UnsupportedError("cycle closed form needs t >= 2");
      if (n < 3) throw InputError("cycle size must be >= 3");
      out.degree_bound = n;
      break;
    case GraphFamily::Star:
      if (t != 2 && t != 3) throw UnsupportedError("star closed form needs t in {2,3}");
      if (n < 2) throw InputError("star closed form requires n >= 2");
      out.degree_bound = n + 2;
      break;
  }
  const int order = family == GraphFamily::Star ? n + 1 : n;
  out.table = BettiTable(order);
  for (int j = 1; j < out.degree_bound; ++j) {
    for (int i = 1; i <= j; ++i) {
      BigInt b;
      switch (family) {
        case GraphFamily::Line: b = line_graded_formula(n, t, i, j); break;
        case GraphFamily::Cycle: b = cycle_graded_formula(n, t, i, j); break;
        case GraphFamily::Star: b = star_graded_formula(n, t, i, j); break;
      }
      out.table.add(i, j, to_count(b));
    }
  }
  return out;
}

}  // namespace pathbetti
