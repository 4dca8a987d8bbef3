#include "hja/matrix.hpp"

#include <stdexcept>

namespace hja {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("matrix: row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix: size mismatch in *");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (hja::is_zero(a)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix: size mismatch in +");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix: size mismatch in -");
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * s;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix: apply size mismatch");
  Vector out(rows_, Scalar(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!hja::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::power(std::size_t k) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix: power of non-square");
  Matrix out = identity(rows_);
  for (std::size_t i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!hja::is_zero(e)) return false;
  return true;
}

Matrix Matrix::unflatten(const Vector& v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("matrix: unflatten size mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& a = res.mat;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // first nonzero entry in this column at or below `lead`
    std::size_t pivot = lead;
    while (pivot < a.rows() && is_zero(a.at(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < a.cols(); ++c)
        swap(a.at(pivot, c), a.at(lead, c));
    Scalar inv = 1 / a.at(lead, col);
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || is_zero(a.at(r, col))) continue;
      Scalar f = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) -= f * a.at(lead, c);
    }
    res.pivots.push_back(col);
    ++lead;
  }
  res.rank = lead;
  return res;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rref(m).rank == m.rows();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix: inverse of non-square");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] >= n)
    throw std::domain_error("matrix: singular, no inverse");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = r.mat.at(i, n + j);
  return out;
}

}  // namespace hja
