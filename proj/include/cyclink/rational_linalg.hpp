#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cyclink/bigrational.hpp"
#include "cyclink/error.hpp"

namespace cyclink {

// Dense row-major matrix.
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

  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.begin()->size() : 0;
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw InvalidInput("ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<BigRational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T, class V>
std::vector<V> mat_vec(const Matrix<T>& a, std::span<const V> x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix-vector dimension mismatch");
  std::vector<V> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += a(i, j) * x[j];
  return out;
}

RationalMatrix to_rational(const IntMatrix& a);
BigInt determinant(const IntMatrix& a);

// Some x with A x = b, free variables pinned to 0; nullopt iff inconsistent.
std::optional<std::vector<BigRational>> solve_particular(const RationalMatrix& a,
                                                         std::span<const BigRational> b);
std::optional<std::vector<BigRational>> solve_particular(const IntMatrix& a, std::span<const BigInt> b);

// Basis of {x : A x = 0}, one vector per free column.
std::vector<std::vector<BigRational>> nullspace_basis(const RationalMatrix& a);

struct SNFResult {
  IntMatrix U, S, V;  // A = U S V
};
SNFResult smith_normal_form(const IntMatrix& a);

// Least d >= 1 with A x = d b solvable over the integers; nullopt if not solvable over Q.
std::optional<BigInt> minimal_scalar_integer_solution(const IntMatrix& a, std::span<const BigInt> b);

}  // namespace cyclink
