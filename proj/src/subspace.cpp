#include "hja/subspace.hpp"

#include <stdexcept>

namespace hja {

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace: ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  RrefResult r = rref(Matrix::from_rows(vectors, ambient_dim));
  Matrix b(r.rank, ambient_dim);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) b.at(i, j) = r.mat.at(i, j);
  s.basis_ = b;
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

bool Subspace::contains(const Vector& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (ambient_ != other.ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("subspace: vector length mismatch");
  // Eliminate against the RREF basis; the residual must vanish. Because the
  // basis carries an identity block at its pivot columns, the coefficients are
  // just the entries of v at those columns.
  Vector coeffs(dim());
  Vector residual = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = residual[pivots_[i]];
    if (is_zero(coeffs[i])) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      residual[j] -= coeffs[i] * basis_.at(i, j);
  }
  for (const auto& e : residual)
    if (!is_zero(e)) return std::nullopt;
  return coeffs;
}

Subspace nullspace(const Matrix& m) {
  RrefResult r = rref(m);
  std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n, Scalar(0));
    v[j] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.mat.at(i, j);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
  check_ambient(s1, s2);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s1.dim(); ++i) rows.push_back(s1.basis_vector(i));
  for (std::size_t i = 0; i < s2.dim(); ++i) rows.push_back(s2.basis_vector(i));
  return Subspace::span(rows, s1.ambient_dim());
}

Subspace subspace_intersect(const Subspace& s1, const Subspace& s2) {
  check_ambient(s1, s2);
  std::size_t n = s1.ambient_dim();
  std::size_t r1 = s1.dim(), r2 = s2.dim();
  if (r1 == 0 || r2 == 0) return Subspace(n);
  // x in S1 cap S2 iff x = u^T A = v^T B; solve A^T u - B^T v = 0.
  Matrix sys(n, r1 + r2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < r1; ++i) sys.at(j, i) = s1.basis().at(i, j);
    for (std::size_t i = 0; i < r2; ++i) sys.at(j, r1 + i) = -s2.basis().at(i, j);
  }
  Subspace coeffs = nullspace(sys);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    Vector c = coeffs.basis_vector(i);
    Vector x(n, Scalar(0));
    for (std::size_t a = 0; a < r1; ++a)
      for (std::size_t j = 0; j < n; ++j) x[j] += c[a] * s1.basis().at(a, j);
    rows.push_back(std::move(x));
  }
  return Subspace::span(rows, n);
}

bool is_direct(const Subspace& s1, const Subspace& s2) {
  return subspace_intersect(s1, s2).dim() == 0;
}

Subspace complement(const Subspace& s) {
  std::size_t n = s.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : s.pivots()) is_pivot[p] = true;
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n, Scalar(0));
    v[j] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, n);
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim())
    throw std::invalid_argument("map_subspace: size mismatch");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.dim(); ++i)
    rows.push_back(m.apply(s.basis_vector(i)));
  return Subspace::span(rows, m.rows());
}

}  // namespace hja
