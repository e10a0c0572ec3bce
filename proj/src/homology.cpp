#include "pathbetti/homology.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "pathbetti/errors.hpp"

namespace pathbetti {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// dst - factor * src, both sorted by column; zero results dropped.
PrimeFieldMatrix::Row axpy(const PrimeFieldMatrix::Row& dst, std::uint32_t factor,
                           const PrimeFieldMatrix::Row& src, std::uint32_t p) {
  PrimeFieldMatrix::Row out;
  out.reserve(dst.size() + src.size());
  std::size_t a = 0, b = 0;
  const std::uint64_t neg = p - factor;
  while (a < dst.size() || b < src.size()) {
    if (b == src.size() || (a < dst.size() && dst[a].col < src[b].col)) {
      out.push_back(dst[a++]);
    } else if (a == dst.size() || src[b].col < dst[a].col) {
      out.push_back({src[b].col, static_cast<std::uint32_t>(neg * src[b].value % p)});
      ++b;
    } else {
      auto v = static_cast<std::uint32_t>((dst[a].value + neg * src[b].value) % p);
      if (v) out.push_back({dst[a].col, v});
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t prime)
    : rows_(rows), cols_(cols), prime_(prime) {
  if (prime >= (std::uint32_t{1} << 31) || !is_prime(prime)) {
    throw InputError("field order " + std::to_string(prime) + " is not a prime below 2^31");
  }
}

void PrimeFieldMatrix::add(std::size_t r, std::size_t c, std::int64_t value) {
  Row& row = rows_.at(r);
  const std::uint32_t v = reduce(value, prime_);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value = static_cast<std::uint32_t>((std::uint64_t{it->value} + v) % prime_);
    if (it->value == 0) row.erase(it);
  } else if (v != 0) {
    row.insert(it, {c, v});
  }
}

std::uint32_t PrimeFieldMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return it != row.end() && it->col == c ? it->value : 0;
}

bool PrimeFieldMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

std::size_t PrimeFieldMatrix::rank() const {
  // pivot column -> reduced row with leading entry 1
  std::map<std::size_t, Row> pivots;
  for (Row row : rows_) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().col);
      if (it == pivots.end()) {
        const std::uint32_t inv = mod_inverse(row.front().value, prime_);
        for (auto& e : row) e.value = static_cast<std::uint32_t>(std::uint64_t{e.value} * inv % prime_);
        const std::size_t col = row.front().col;
        pivots.emplace(col, std::move(row));
        break;
      }
      row = axpy(row, row.front().value, it->second, prime_);
    }
  }
  return pivots.size();
}

PrimeFieldMatrix PrimeFieldMatrix::multiply(const PrimeFieldMatrix& rhs) const {
  if (cols_ != rhs.rows() || prime_ != rhs.prime_) {
    throw InputError("matrix product: incompatible operands");
  }
  PrimeFieldMatrix out(rows(), rhs.cols(), prime_);
  for (std::size_t r = 0; r < rows(); ++r) {
    Row acc;
    for (const Entry& e : rows_[r]) acc = axpy(acc, prime_ - e.value, rhs.row(e.col), prime_);
    out.rows_[r] = std::move(acc);
  }
  return out;
}

PrimeFieldMatrix boundary_matrix(const std::vector<std::vector<VertexSet>>& faces, int p,
                                 std::uint32_t prime) {
  const auto hi = static_cast<std::size_t>(p + 1);
  const std::size_t cols = hi < faces.size() ? faces[hi].size() : 0;
  const std::size_t rows = p >= 0 && hi - 1 < faces.size() ? faces[hi - 1].size() : 0;
  PrimeFieldMatrix m(rows, cols, prime);
  if (p < 0 || cols == 0) return m;
  const auto& lower = faces[hi - 1];
  for (std::size_t c = 0; c < cols; ++c) {
    const VertexSet& face = faces[hi][c];
    for (std::size_t k = 0; k < face.size(); ++k) {
      const VertexSet sub = face.without(face[k]);
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      m.add(static_cast<std::size_t>(it - lower.begin()), c, k % 2 == 0 ? 1 : -1);
    }
  }
  return m;
}

bool HomologyProfile::is_acyclic() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

std::vector<std::pair<int, std::size_t>> HomologyProfile::support() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k]) out.emplace_back(static_cast<int>(k) - 1, dims[k]);
  }
  return out;
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& k, std::uint32_t prime,
                                      std::size_t cap) {
  HomologyProfile profile;
  profile.prime = prime;
  if (prime >= (std::uint32_t{1} << 31) || !is_prime(prime)) {
    throw InputError("field order " + std::to_string(prime) + " is not a prime below 2^31");
  }
  const auto faces = faces_by_dimension(k, cap);
  if (faces.empty()) return profile;

  // ranks[d + 1] = rank ∂_d for d = -1 .. dim + 1; ∂_{-1} and ∂_{dim+1} vanish.
  const int dim = static_cast<int>(faces.size()) - 2;
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (int d = 0; d <= dim; ++d) ranks[d + 1] = boundary_matrix(faces, d, prime).rank();
  for (int d = -1; d <= dim; ++d) {
    profile.dims.push_back(faces[d + 1].size() - ranks[d + 1] - ranks[d + 2]);
  }
  return profile;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& k, std::size_t cap) {
  const auto faces = faces_by_dimension(k, cap);
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < faces.size(); ++d) {
    // d indexes dimension d - 1, so the sign is (-1)^(d-1).
    const auto count = static_cast<std::int64_t>(faces[d].size());
    chi += d % 2 == 0 ? -count : count;
  }
  return chi;
}

}  // namespace pathbetti
