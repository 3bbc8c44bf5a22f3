#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "laura/error.hpp"

namespace laura {

using Rational = mpq_class;

/// Dense row-major matrix over an exact field. Elimination skips zero
/// entries, which keeps the 0/1 matrices of string modules cheap.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  Matrix column(std::size_t c) const {
    Matrix out(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
    return out;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < idx.size(); ++k) out(r, k) = (*this)(r, idx[k]);
    }
    return out;
  }

  Matrix row_range(std::size_t begin, std::size_t end) const {
    Matrix out(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (y != 0) out(i, j) += x * y;
        }
      }
    }
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<T> out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<T> out(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  }
  return out;
}

/// Reduced row echelon form together with the pivot columns.
template <class T>
std::pair<Matrix<T>, std::vector<std::size_t>> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, c) == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pick, j), m(row, j));
    }
    T inv = 1 / T(m(row, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (m(row, j) != 0) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c) == 0) continue;
      T f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).second.size();
}

/// Columns form a basis of the null space.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix<T> out(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out(pivots[i], k) = -r(i, free[k]);
  }
  return out;
}

/// A basis of the column space, taken from the columns of `m` itself.
template <class T>
Matrix<T> column_space(const Matrix<T>& m) {
  return m.columns(rref(m).second);
}

/// Indices of standard basis vectors completing the columns of `u` (assumed
/// independent) to a basis of the ambient space.
template <class T>
std::vector<std::size_t> complement_indices(const Matrix<T>& u) {
  const std::size_t n = u.rows();
  auto [r, pivots] = rref(hstack(u, Matrix<T>::identity(n)));
  std::vector<std::size_t> out;
  for (auto p : pivots) {
    if (p >= u.cols()) out.push_back(p - u.cols());
  }
  return out;
}

template <class T>
Matrix<T> standard_vectors(std::size_t n, const std::vector<std::size_t>& idx) {
  Matrix<T> out(n, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) out(idx[k], k) = 1;
  return out;
}

/// Some X with A X = B, or nullopt when the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  auto [r, pivots] = rref(hstack(a, b));
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
  }
  return x;
}

template <class T>
Matrix<T> solve_or_throw(const Matrix<T>& a, const Matrix<T>& b, const char* what) {
  auto x = solve(a, b);
  if (!x) throw AnomalyError(std::string("inconsistent linear system in ") + what);
  return *std::move(x);
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  return solve_or_throw(m, Matrix<T>::identity(m.rows()), "inverse");
}

}  // namespace laura
