#pragma once

// Dense matrices over the prime field F_q and the elimination kernels that the
// rest of the library builds on (rank, inversion, products).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankmetric/error.hpp"

namespace rankmetric {

using Residue = std::uint32_t;

/// Arithmetic modulo a prime q. Values are always kept in [0, q).
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(Residue q) : q_(q) {
    detail::require(is_prime(q), "q must be prime, got " + std::to_string(q));
    detail::require(q < (1u << 16), "q must be below 2^16");
  }

  static constexpr bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t p = 2; p * p <= v; ++p)
      if (v % p == 0) return false;
    return true;
  }

  Residue q() const { return q_; }

  Residue add(Residue a, Residue b) const {
    Residue s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + q_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : q_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % q_);
  }
  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = 1 % q_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  // Fermat inverse; a must be nonzero.
  Residue inv(Residue a) const {
    detail::require(a % q_ != 0, "inverse of zero in F_q");
    return pow(a, q_ - 2);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue q_ = 2;
};

/// m x n matrix over F_q, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(Residue q, std::size_t rows, std::size_t cols)
      : field_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static QMatrix identity(Residue q, std::size_t size) {
    QMatrix id(q, size, size);
    for (std::size_t i = 0; i < size; ++i) id(i, i) = 1;
    return id;
  }

  Residue q() const { return field_.q(); }
  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Residue> data() const { return data_; }
  std::span<Residue> data() { return data_; }

  bool is_zero() const {
    for (Residue v : data_)
      if (v) return false;
    return true;
  }

  QMatrix transposed() const {
    QMatrix t(q(), cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  QMatrix operator*(const QMatrix& rhs) const {
    detail::require(field_ == rhs.field_ && cols_ == rhs.rows_, "matrix product shape mismatch");
    QMatrix out(q(), rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        Residue a = (*this)(r, k);
        if (!a) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c)
          out(r, c) = field_.add(out(r, c), field_.mul(a, rhs(k, c)));
      }
    return out;
  }

  std::vector<Residue> apply(std::span<const Residue> v) const {
    detail::require(v.size() == cols_, "matrix-vector shape mismatch");
    std::vector<Residue> out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        out[r] = field_.add(out[r], field_.mul((*this)(r, c), v[c]));
    return out;
  }

  QMatrix operator-(const QMatrix& rhs) const {
    detail::require(field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_,
                    "matrix difference shape mismatch");
    QMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], rhs.data_[i]);
    return out;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

namespace detail {

// In-place row reduction of a rows x cols block stored row-major in `a`.
// Returns the rank. Pivot is the first nonzero entry in the current column.
inline std::size_t eliminate(const PrimeField& f, std::span<Residue> a, std::size_t rows,
                             std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[pivot * cols + k], a[rank * cols + k]);
    const Residue inv = f.inv(a[rank * cols + c]);
    for (std::size_t k = c; k < cols; ++k) a[rank * cols + k] = f.mul(a[rank * cols + k], inv);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Residue factor = a[r * cols + c];
      if (!factor) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[rank * cols + k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over F_q of a rows x cols matrix given as a flat row-major array.
/// `scratch` is overwritten; callers in hot loops reuse it to avoid allocation.
inline std::size_t rank_of(const PrimeField& f, std::span<const Residue> flat, std::size_t rows,
                           std::size_t cols, std::vector<Residue>& scratch) {
  scratch.assign(flat.begin(), flat.end());
  return detail::eliminate(f, scratch, rows, cols);
}

inline std::size_t rank_of(const QMatrix& m) {
  std::vector<Residue> scratch;
  return rank_of(m.field(), m.data(), m.rows(), m.cols(), scratch);
}

/// Inverse of a square matrix over F_q; throws if singular.
inline QMatrix inverse(const QMatrix& m) {
  detail::require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const PrimeField& f = m.field();
  // Augmented [m | I], Gauss-Jordan.
  std::vector<Residue> a(n * 2 * n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * 2 * n + c] = m(r, c);
    a[r * 2 * n + n + r] = 1;
  }
  const std::size_t w = 2 * n;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot * w + c] == 0) ++pivot;
    detail::require(pivot < n, "matrix is singular over F_q");
    if (pivot != c)
      for (std::size_t k = 0; k < w; ++k) std::swap(a[pivot * w + k], a[c * w + k]);
    const Residue inv = f.inv(a[c * w + c]);
    for (std::size_t k = 0; k < w; ++k) a[c * w + k] = f.mul(a[c * w + k], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const Residue factor = a[r * w + c];
      if (!factor) continue;
      for (std::size_t k = 0; k < w; ++k) a[r * w + k] = f.sub(a[r * w + k], f.mul(factor, a[c * w + k]));
    }
  }
  QMatrix out(m.q(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = a[r * w + n + c];
  return out;
}

}  // namespace rankmetric
