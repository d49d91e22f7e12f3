#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ldlab {

bool is_prime(std::uint64_t n);

/// Multiplicative inverse of a nonzero residue modulo the prime p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Sparse matrix over the prime field F_p. Nonzero entries are stored reduced
/// into [0, p) and sorted by row-major position, so equality is plain
/// comparison of the entry lists.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t p, std::size_t n);
  static Matrix from_rows(std::uint32_t p,
                          const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols_if_empty = 0);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t value);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix scaled(std::uint32_t k) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;

  /// Row/column of the first entry (row-major order) where the two differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(
      const Matrix& other) const;

  std::vector<std::vector<std::int64_t>> to_rows() const;
  std::string str() const;

  using Entry = std::pair<std::uint64_t, std::uint32_t>;
  /// Nonzero entries as (row * cols + col, value), in increasing position.
  const std::vector<Entry>& nonzeros() const { return nz_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend bool operator<(const Matrix& a, const Matrix& b);
  friend Matrix kron(const Matrix& a, const Matrix& b);

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> nz_;

  std::uint64_t pos(std::size_t r, std::size_t c) const { return std::uint64_t{r} * cols_ + c; }
  static Matrix from_unsorted(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Entry> entries);
  std::vector<std::uint32_t> dense() const;
};

/// Kronecker product with index-lexicographic (row-major) ordering:
/// entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
Matrix kron(const Matrix& a, const Matrix& b);

/// Permutation matrix A⊗B → B⊗A sending basis (i,j) to (j,i).
Matrix swap_matrix(std::uint32_t p, std::size_t a, std::size_t b);

/// Column vector of the identity pairing: entry (i*n + k) is 1 iff i == k.
Matrix identity_pairing(std::uint32_t p, std::size_t n);

std::size_t hash_value(const Matrix& m);

}  // namespace ldlab
