#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pathbetti/simplicial_complex.hpp"

namespace pathbetti {

inline constexpr std::uint32_t kDefaultPrime = 32003;

bool is_prime(std::uint64_t p);

/// Sparse matrix over GF(p); each row keeps its nonzero entries sorted by column.
class PrimeFieldMatrix {
 public:
  struct Entry {
    std::size_t col;
    std::uint32_t value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  /// Throws InputError unless `prime` is prime and below 2^31.
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t prime);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return prime_; }
  const Row& row(std::size_t r) const { return rows_[r]; }

  /// Adds `value` (any integer, reduced mod p) to entry (r, c).
  void add(std::size_t r, std::size_t c, std::int64_t value);
  std::uint32_t at(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  /// Row-echelon rank by Gaussian elimination; pivots taken in column order.
  std::size_t rank() const;

  /// this * rhs; dimensions and primes must agree.
  PrimeFieldMatrix multiply(const PrimeFieldMatrix& rhs) const;

 private:
  std::vector<Row> rows_;
  std::size_t cols_;
  std::uint32_t prime_;
};

/// ∂_p of the augmented chain complex: rows index the (p-1)-faces, columns the
/// p-faces, both in the lexicographic order of faces_by_dimension. ∂_0 sends
/// every vertex to the empty face.
PrimeFieldMatrix boundary_matrix(const std::vector<std::vector<VertexSet>>& faces, int p,
                                 std::uint32_t prime);

/// dim_k H̃_p(K; GF(prime)) for p = -1 .. dim K.
struct HomologyProfile {
  std::uint32_t prime = kDefaultPrime;
  /// dims[p + 1] is the dimension in degree p.
  std::vector<std::size_t> dims;

  std::size_t at(int p) const {
    const auto k = static_cast<std::ptrdiff_t>(p) + 1;
    return k >= 0 && k < static_cast<std::ptrdiff_t>(dims.size()) ? dims[k] : 0;
  }
  bool is_acyclic() const;
  /// Degrees carrying nonzero homology, ascending.
  std::vector<std::pair<int, std::size_t>> support() const;
};

/// The void complex yields an empty profile. Throws InputError on a non-prime
/// field order and SizeLimitError when K has more than `cap` faces.
HomologyProfile reduced_homology_dims(const SimplicialComplex& k,
                                      std::uint32_t prime = kDefaultPrime,
                                      std::size_t cap = kDefaultFaceCap);

/// Σ_{p >= -1} (-1)^p · #p-faces; 0 for the void complex.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& k,
                                          std::size_t cap = kDefaultFaceCap);

}  // namespace pathbetti
