#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cubicsym/exact/cyclotomic.hpp"

namespace cubicsym {

/// Dense row-major matrix over the cyclotomic numbers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);
  Matrix(std::initializer_list<std::initializer_list<Cyclotomic>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Cyclotomic> diag);
  static Matrix diagonal(std::initializer_list<Cyclotomic> diag);
  static Matrix scalar(std::size_t n, const Cyclotomic& c);
  /// Permutation matrix sending basis vector e_i to e_{perm[i]}.
  static Matrix permutation(std::span<const int> perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  const std::vector<Cyclotomic>& entries() const { return entries_; }

  std::span<const Cyclotomic> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Cyclotomic trace() const;
  bool is_zero() const;
  bool is_identity() const;
  /// True iff the matrix equals c * identity for some c.
  bool is_scalar() const;
  /// Least common multiple of the entry conductors.
  int conductor() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Cyclotomic& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
std::vector<Cyclotomic> operator*(const Matrix& a, std::span<const Cyclotomic> v);

/// Determinant by elimination; throws Error for non-square input.
Cyclotomic determinant(const Matrix& m);
/// Inverse; throws ZeroDivision when singular.
Matrix inverse(const Matrix& m);
Matrix power(const Matrix& m, long e);

std::string to_string(const Matrix& m);

}  // namespace cubicsym

template <>
struct std::hash<cubicsym::Matrix> {
  std::size_t operator()(const cubicsym::Matrix& m) const noexcept { return m.hash(); }
};
