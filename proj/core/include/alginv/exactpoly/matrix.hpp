#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "alginv/exactpoly/poly.hpp"
#include "alginv/exactpoly/rational.hpp"

namespace alginv {

/// Dense row-major matrix over a ring-like scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T trace() const {
    T out(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) out += (*this)(i, i);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& scale(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
/// Basis of {v : m v = 0}, one vector per free column, the free entry set to 1.
std::vector<std::vector<Rational>> nullspace(QMatrix m);
Rational determinant(QMatrix m);
/// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);

Poly determinant(const PolyMatrix& m);
/// Converts a parameter-free and coordinate-free Poly matrix to rationals; throws DomainError otherwise.
QMatrix to_rational(const PolyMatrix& m);
PolyMatrix to_poly(const QMatrix& m);

std::string to_string(const QMatrix& m);
std::string to_string(const PolyMatrix& m, bool dim2_names = true);

}  // namespace alginv
