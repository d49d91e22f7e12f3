#include "ldlab/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ldlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("zero has no inverse modulo p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.prime() != b.prime()) {
    throw std::invalid_argument("matrices over different prime fields");
  }
}

}  // namespace

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
}

Matrix Matrix::from_unsorted(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
  Matrix m(p, rows, cols);
  std::sort(entries.begin(), entries.end());
  for (const auto& [at, v] : entries) {
    if (!m.nz_.empty() && m.nz_.back().first == at) {
      m.nz_.back().second = static_cast<std::uint32_t>((std::uint64_t{m.nz_.back().second} + v) % p);
    } else {
      m.nz_.push_back({at, v % p});
    }
  }
  std::erase_if(m.nz_, [](const Entry& e) { return e.second == 0; });
  return m;
}

std::vector<std::uint32_t> Matrix::dense() const {
  std::vector<std::uint32_t> out(rows_ * cols_, 0);
  for (const auto& [at, v] : nz_) out[at] = v;
  return out;
}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  m.nz_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) m.nz_.push_back({std::uint64_t{i} * n + i, 1});
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p,
                         const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

std::uint32_t Matrix::operator()(std::size_t r, std::size_t c) const {
  const std::uint64_t at = pos(r, c);
  const auto it = std::lower_bound(nz_.begin(), nz_.end(), Entry{at, 0});
  return it != nz_.end() && it->first == at ? it->second : 0;
}

void Matrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  const std::uint64_t at = pos(r, c);
  const std::uint32_t v = reduce(value, p_);
  if (nz_.empty() || nz_.back().first < at) {
    if (v != 0) nz_.push_back({at, v});
    return;
  }
  const auto it = std::lower_bound(nz_.begin(), nz_.end(), Entry{at, 0});
  if (it != nz_.end() && it->first == at) {
    if (v == 0) {
      nz_.erase(it);
    } else {
      it->second = v;
    }
  } else if (v != 0) {
    nz_.insert(it, {at, v});
  }
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(p_, rows_, rhs.cols_);
  std::vector<std::size_t> row_start(rhs.rows_ + 1, 0);
  for (const auto& e : rhs.nz_) ++row_start[e.first / rhs.cols_ + 1];
  for (std::size_t k = 0; k < rhs.rows_; ++k) row_start[k + 1] += row_start[k];

  std::vector<std::uint64_t> acc(rhs.cols_, 0);
  std::vector<std::size_t> touched;
  std::size_t i = 0;
  while (i < nz_.size()) {
    const std::size_t row = nz_[i].first / cols_;
    touched.clear();
    for (; i < nz_.size() && nz_[i].first / cols_ == row; ++i) {
      const std::size_t k = nz_[i].first % cols_;
      const std::uint64_t a = nz_[i].second;
      for (std::size_t t = row_start[k]; t < row_start[k + 1]; ++t) {
        const std::size_t j = rhs.nz_[t].first % rhs.cols_;
        if (acc[j] == 0) touched.push_back(j);
        acc[j] = (acc[j] + a * rhs.nz_[t].second) % p_;
        if (acc[j] == 0) acc[j] = p_;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      const std::uint64_t v = acc[j] % p_;
      if (v != 0) out.nz_.push_back({std::uint64_t{row} * rhs.cols_ + j, static_cast<std::uint32_t>(v)});
      acc[j] = 0;
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(*this, rhs);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  std::vector<Entry> all = nz_;
  all.insert(all.end(), rhs.nz_.begin(), rhs.nz_.end());
  return from_unsorted(p_, rows_, cols_, std::move(all));
}

Matrix Matrix::scaled(std::uint32_t k) const {
  std::vector<Entry> out = nz_;
  for (auto& e : out) e.second = static_cast<std::uint32_t>(std::uint64_t{e.second} * k % p_);
  return from_unsorted(p_, rows_, cols_, std::move(out));
}

Matrix Matrix::transpose() const {
  std::vector<Entry> out;
  out.reserve(nz_.size());
  for (const auto& [at, v] : nz_) out.push_back({(at % cols_) * rows_ + at / cols_, v});
  return from_unsorted(p_, cols_, rows_, std::move(out));
}

bool Matrix::is_zero() const { return nz_.empty(); }

bool Matrix::is_identity() const {
  if (rows_ != cols_ || nz_.size() != rows_) return false;
  for (std::size_t i = 0; i < nz_.size(); ++i) {
    if (nz_[i].first != pos(i, i) || nz_[i].second != 1) return false;
  }
  return true;
}

std::size_t Matrix::rank() const {
  std::vector<std::uint32_t> m = dense();
  auto at = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return m[r * cols_ + c]; };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(rank, c));
    const std::uint32_t inv = inverse_mod(at(rank, col), p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || at(r, col) == 0) continue;
      const std::uint64_t factor = std::uint64_t{at(r, col)} * inv % p_;
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::uint64_t sub = factor * at(rank, c) % p_;
        at(r, c) = static_cast<std::uint32_t>((at(r, c) + p_ - sub) % p_);
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  std::vector<std::uint32_t> a = dense();
  std::vector<std::uint32_t> inv = identity(p_, n).dense();
  auto A = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return a[r * n + c]; };
  auto V = [&](std::size_t r, std::size_t c) -> std::uint32_t& { return inv[r * n + c]; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(A(pivot, c), A(col, c));
      std::swap(V(pivot, c), V(col, c));
    }
    const std::uint32_t scale = inverse_mod(A(col, col), p_);
    for (std::size_t c = 0; c < n; ++c) {
      A(col, c) = static_cast<std::uint32_t>(std::uint64_t{A(col, c)} * scale % p_);
      V(col, c) = static_cast<std::uint32_t>(std::uint64_t{V(col, c)} * scale % p_);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A(r, col) == 0) continue;
      const std::uint64_t factor = A(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        A(r, c) = static_cast<std::uint32_t>((A(r, c) + p_ - factor * A(col, c) % p_) % p_);
        V(r, c) = static_cast<std::uint32_t>((V(r, c) + p_ - factor * V(col, c) % p_) % p_);
      }
    }
  }
  Matrix out(p_, n, n);
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (inv[i] != 0) out.nz_.push_back({i, inv[i]});
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_difference(
    const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return std::pair<std::size_t, std::size_t>{0, 0};
  const auto [mine, theirs] = std::mismatch(nz_.begin(), nz_.end(), other.nz_.begin(), other.nz_.end());
  if (mine == nz_.end() && theirs == other.nz_.end()) return std::nullopt;
  std::uint64_t at = 0;
  if (mine == nz_.end()) {
    at = theirs->first;
  } else if (theirs == other.nz_.end()) {
    at = mine->first;
  } else {
    at = std::min(mine->first, theirs->first);
  }
  return std::pair<std::size_t, std::size_t>{at / cols_, at % cols_};
}

std::vector<std::vector<std::int64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_, 0));
  for (const auto& [at, v] : nz_) out[at / cols_][at % cols_] = v;
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  const auto rows = to_rows();
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << rows[r][c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.dense() < b.dense();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const std::uint32_t p = a.prime();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Matrix::Entry> out;
  out.reserve(a.nz_.size() * b.nz_.size());
  for (const auto& [pa, x] : a.nz_) {
    const std::size_t i1 = pa / a.cols_;
    const std::size_t j1 = pa % a.cols_;
    for (const auto& [pb, y] : b.nz_) {
      const std::size_t i2 = pb / b.cols_;
      const std::size_t j2 = pb % b.cols_;
      out.push_back({std::uint64_t{i1 * b.rows() + i2} * cols + j1 * b.cols() + j2,
                     static_cast<std::uint32_t>(std::uint64_t{x} * y % p)});
    }
  }
  return Matrix::from_unsorted(p, a.rows() * b.rows(), cols, std::move(out));
}

Matrix swap_matrix(std::uint32_t p, std::size_t a, std::size_t b) {
  Matrix out(p, a * b, a * b);
  for (std::size_t j = 0; j < b; ++j) {
    for (std::size_t i = 0; i < a; ++i) out.set(j * a + i, i * b + j, 1);
  }
  return out;
}

Matrix identity_pairing(std::uint32_t p, std::size_t n) {
  Matrix out(p, n * n, 1);
  for (std::size_t i = 0; i < n; ++i) out.set(i * n + i, 0, 1);
  return out;
}

std::size_t hash_value(const Matrix& m) {
  std::size_t h = 1469598103934665603ULL ^ (m.rows() * 31 + m.cols());
  for (const auto& [at, v] : m.nonzeros()) {
    h ^= at;
    h *= 1099511628211ULL;
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace ldlab
