#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "clustercox/errors.hpp"

namespace clustercox {

/// Dense n x n integer matrix, row-major.
class SquareMatrix {
 public:
  using value_type = std::int64_t;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  SquareMatrix(std::initializer_list<std::initializer_list<value_type>> rows)
      : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      detail::require(row.size() == n_, "matrix rows must all have length n");
      std::size_t j = 0;
      for (value_type v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static SquareMatrix from_rows(const std::vector<std::vector<value_type>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      detail::require(rows[i].size() == rows.size(), "matrix must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  value_type operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  value_type& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::vector<std::vector<value_type>> rows() const {
    std::vector<std::vector<value_type>> out(n_, std::vector<value_type>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  SquareMatrix transposed() const {
    SquareMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  SquareMatrix operator-() const {
    SquareMatrix r(*this);
    for (auto& v : r.a_) v = -v;
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    detail::require(x.n_ == y.n_, "matrix size mismatch");
    SquareMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const value_type v = x(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += v * y(k, j);
      }
    return r;
  }

  /// Principal submatrix on the given (sorted) index set.
  SquareMatrix principal(const std::vector<std::size_t>& idx) const {
    SquareMatrix r(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(idx[i], idx[j]);
    return r;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> a_;
};

inline std::ostream& operator<<(std::ostream& os, const SquareMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) os << ',';
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace clustercox
