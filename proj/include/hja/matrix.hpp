#pragma once

#include <cstddef>
#include <vector>

#include "hja/rational.hpp"

namespace hja {

using Vector = std::vector<Scalar>;

// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  Vector apply(const Vector& v) const;  // matrix * column vector
  Matrix transpose() const;
  Matrix power(std::size_t k) const;  // square matrices only

  bool operator==(const Matrix& rhs) const = default;
  bool is_zero() const;

  // Row-major flattening of a square matrix into a length rows*cols vector;
  // the ambient coordinates used for every operator subspace.
  Vector flatten() const { return entries_.empty() ? Vector{} : entries_; }
  static Matrix unflatten(const Vector& v, std::size_t n);

 private:
  std::size_t rows_, cols_;
  Vector entries_;
};

struct RrefResult {
  Matrix mat;                       // reduced row echelon form, zero rows kept
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RrefResult rref(const Matrix& m);

// Determinant-free invertibility test.
bool is_invertible(const Matrix& m);
Matrix inverse(const Matrix& m);  // throws if singular

}  // namespace hja
