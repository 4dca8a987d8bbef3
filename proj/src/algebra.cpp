#include "hja/algebra.hpp"

#include <stdexcept>

namespace hja {

HomAlgebra::HomAlgebra(std::size_t n, std::vector<Scalar> mu_tensor, Matrix alpha,
                       std::string name, AlgebraFlags flags)
    : n_(n), mu_(std::move(mu_tensor)), alpha_(std::move(alpha)),
      name_(std::move(name)), flags_(flags) {
  if (mu_.size() != n * n * n)
    throw std::invalid_argument("algebra: structure tensor must have n^3 entries");
  if (alpha_.rows() != n || alpha_.cols() != n)
    throw std::invalid_argument("algebra: twist must be n x n");
}

HomAlgebra HomAlgebra::abelian(std::size_t n, std::string name) {
  return HomAlgebra(n, std::vector<Scalar>(n * n * n, Scalar(0)),
                    Matrix::identity(n), std::move(name));
}

Vector HomAlgebra::basis_vector(std::size_t i) const {
  Vector v(n_, Scalar(0));
  v[i] = 1;
  return v;
}

Vector HomAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vector out(n_, Scalar(0));
  for (std::size_t k = 0; k < n_; ++k) out[k] = c(i, j, k);
  return out;
}

Vector HomAlgebra::multiply(const Vector& x, const Vector& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw std::invalid_argument("algebra: multiply length mismatch");
  Vector out(n_, Scalar(0));
  for (std::size_t i = 0; i < n_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (is_zero(y[j])) continue;
      Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < n_; ++k) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

Matrix HomAlgebra::left_multiplication(const Vector& x) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    Vector col = multiply(x, basis_vector(j));
    for (std::size_t k = 0; k < n_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool HomAlgebra::check_commutative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

CheckReport HomAlgebra::check_multiplicative_report() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Vector lhs = alpha_.apply(basis_product(i, j));
      Vector rhs = multiply(alpha_.col(i), alpha_.col(j));
      if (lhs != rhs) return {false, {i, j}};
    }
  return {};
}

bool HomAlgebra::check_multiplicative() const {
  return check_multiplicative_report().ok;
}

Vector HomAlgebra::hom_jordan_residual(const Vector& x, const Vector& y) const {
  Matrix alpha2 = alpha_ * alpha_;
  Vector xx = multiply(x, x);
  Vector lhs = multiply(alpha2.apply(x), multiply(y, xx));
  Vector rhs = multiply(multiply(alpha_.apply(x), y), alpha_.apply(xx));
  Vector out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = lhs[k] - rhs[k];
  return out;
}

CheckReport HomAlgebra::check_hom_jordan() const {
  if (!check_commutative())
    throw std::domain_error("algebra: hom-jordan check requires commutativity");
  Matrix alpha2 = alpha_ * alpha_;
  // One placement of the linearization: the distinguished variable x1 goes
  // through alpha^2 / alpha, the pair (x2, x3) through mu(x,x).
  auto term = [&](const Vector& x1, const Vector& x2, const Vector& x3,
                  const Vector& y) {
    Vector p = multiply(x2, x3);
    Vector lhs = multiply(alpha2.apply(x1), multiply(y, p));
    Vector rhs = multiply(multiply(alpha_.apply(x1), y), alpha_.apply(p));
    for (std::size_t k = 0; k < n_; ++k) lhs[k] -= rhs[k];
    return lhs;
  };
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u; v < n_; ++v)
      for (std::size_t w = v; w < n_; ++w)
        for (std::size_t y = 0; y < n_; ++y) {
          Vector eu = basis_vector(u), ev = basis_vector(v),
                 ew = basis_vector(w), ey = basis_vector(y);
          Vector r = term(eu, ev, ew, ey);
          Vector r2 = term(ev, eu, ew, ey);
          Vector r3 = term(ew, eu, ev, ey);
          bool zero = true;
          for (std::size_t k = 0; k < n_; ++k)
            if (!is_zero(r[k] + r2[k] + r3[k])) { zero = false; break; }
          if (!zero) return {false, {u, v, w, y}};
        }
  return {};
}

Subspace HomAlgebra::centralizer() const {
  // mu(x, e_j) = 0 for all j, linear in x.
  Matrix sys(n_ * n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        sys.at(j * n_ + k, i) = c(i, j, k);
  return nullspace(sys);
}

Subspace HomAlgebra::product_subspace(const Subspace& s1, const Subspace& s2) const {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s2.dim(); ++j)
      rows.push_back(multiply(s1.basis_vector(i), s2.basis_vector(j)));
  return Subspace::span(rows, n_);
}

Subspace HomAlgebra::product_full() const {
  Subspace v = Subspace::full(n_);
  return product_subspace(v, v);
}

bool HomAlgebra::is_perfect() const { return product_full().dim() == n_; }

bool HomAlgebra::is_hom_ideal(const Subspace& s) const {
  if (s.ambient_dim() != n_)
    throw std::invalid_argument("algebra: subspace ambient mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector b = s.basis_vector(i);
    if (!s.contains(alpha_.apply(b))) return false;
    for (std::size_t j = 0; j < n_; ++j)
      if (!s.contains(multiply(b, basis_vector(j)))) return false;
  }
  return true;
}

bool HomAlgebra::is_hom_subalgebra(const Subspace& s) const {
  if (s.ambient_dim() != n_)
    throw std::invalid_argument("algebra: subspace ambient mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!s.contains(alpha_.apply(s.basis_vector(i)))) return false;
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(multiply(s.basis_vector(i), s.basis_vector(j))))
        return false;
  }
  return true;
}

Subspace HomAlgebra::ideal_closure(const Subspace& seed) const {
  Subspace s = seed;
  Subspace v = Subspace::full(n_);
  for (;;) {
    Subspace next = subspace_sum(s, map_subspace(alpha_, s));
    next = subspace_sum(next, product_subspace(s, v));
    if (next.dim() == s.dim()) return s;
    s = next;
  }
}

HomAlgebra direct_sum(const HomAlgebra& a1, const HomAlgebra& a2) {
  std::size_t n1 = a1.dim(), n2 = a2.dim(), n = n1 + n2;
  std::vector<Scalar> mu(n * n * n, Scalar(0));
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
  };
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j)
      for (std::size_t k = 0; k < n1; ++k) mu[idx(i, j, k)] = a1.c(i, j, k);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t k = 0; k < n2; ++k)
        mu[idx(n1 + i, n1 + j, n1 + k)] = a2.c(i, j, k);
  Matrix alpha(n, n);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) alpha.at(i, j) = a1.alpha().at(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      alpha.at(n1 + i, n1 + j) = a2.alpha().at(i, j);
  return HomAlgebra(n, std::move(mu), std::move(alpha),
                    a1.name() + "+" + a2.name());
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta) {
  std::size_t n = a.dim();
  if (beta.rows() != n || beta.cols() != n)
    throw std::invalid_argument("yau_twist: beta must be n x n");
  if (beta * a.alpha() != a.alpha() * beta)
    throw std::invalid_argument("yau_twist: beta does not commute with alpha");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = beta.apply(a.basis_product(i, j));
      Vector rhs = a.multiply(beta.col(i), beta.col(j));
      if (lhs != rhs)
        throw std::invalid_argument("yau_twist: beta is not an algebra morphism");
    }
  std::vector<Scalar> mu(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector p = beta.apply(a.basis_product(i, j));
      for (std::size_t k = 0; k < n; ++k) mu[(i * n + j) * n + k] = p[k];
    }
  return HomAlgebra(n, std::move(mu), beta * a.alpha(), a.name() + "-twisted");
}

Subspace alpha_commutant(const Matrix& alpha) {
  std::size_t n = alpha.rows();
  // W*alpha - alpha*W = 0, linear in the n^2 entries of W (row-major).
  Matrix sys(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t eq = p * n + q;
      for (std::size_t r = 0; r < n; ++r) {
        sys.at(eq, p * n + r) += alpha.at(r, q);
        sys.at(eq, r * n + q) -= alpha.at(p, r);
      }
    }
  return nullspace(sys);
}

HomAlgebra commutant_plus_algebra(const Matrix& alpha) {
  if (alpha.rows() != alpha.cols())
    throw std::invalid_argument("commutant_plus_algebra: alpha must be square");
  std::size_t n = alpha.rows();
  Subspace w = alpha_commutant(alpha);
  std::size_t d = w.dim();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < d; ++i)
    basis.push_back(Matrix::unflatten(w.basis_vector(i), n));
  std::vector<Scalar> mu(d * d * d, Scalar(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix prod = basis[i] * basis[j] + basis[j] * basis[i];
      auto coords = w.coordinates(prod.flatten());
      if (!coords)
        throw std::logic_error("commutant_plus_algebra: product left the commutant");
      for (std::size_t k = 0; k < d; ++k) mu[(i * d + j) * d + k] = (*coords)[k];
    }
  Matrix sigma(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Matrix comp = alpha * basis[j];
    auto coords = w.coordinates(comp.flatten());
    if (!coords)
      throw std::logic_error("commutant_plus_algebra: sigma left the commutant");
    for (std::size_t k = 0; k < d; ++k) sigma.at(k, j) = (*coords)[k];
  }
  return HomAlgebra(d, std::move(mu), std::move(sigma), "commutant-plus");
}

std::vector<BilinearForm> invariant_forms(const HomAlgebra& a) {
  std::size_t n = a.dim();
  // Unknown Gram matrix g (n^2 entries, row-major); constraints over all
  // basis triples (i, j, l): f(mu(e_i,e_j), e_l) = f(e_i, mu(e_j,e_l)).
  Matrix sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        std::size_t eq = (i * n + j) * n + l;
        for (std::size_t k = 0; k < n; ++k) {
          sys.at(eq, k * n + l) += a.c(i, j, k);
          sys.at(eq, i * n + k) -= a.c(j, l, k);
        }
      }
  Subspace sol = nullspace(sys);
  std::vector<BilinearForm> forms;
  for (std::size_t i = 0; i < sol.dim(); ++i)
    forms.push_back({Matrix::unflatten(sol.basis_vector(i), n)});
  return forms;
}

QuotientMap quotient(const HomAlgebra& a, const Subspace& k) {
  std::size_t n1 = a.dim();
  if (!a.is_hom_ideal(k))
    throw std::invalid_argument("quotient: subspace is not a Hom-ideal");
  Subspace comp = complement(k);
  std::size_t n2 = comp.dim();
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n2; ++i) free.push_back(comp.pivots()[i]);

  // pi(v): reduce v modulo K; the residual is supported on the free
  // coordinates and gives the quotient coordinates.
  auto project = [&](const Vector& v) {
    Vector residual = v;
    for (std::size_t i = 0; i < k.dim(); ++i) {
      Scalar f = residual[k.pivots()[i]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < n1; ++j)
        residual[j] -= f * k.basis().at(i, j);
    }
    Vector out(n2);
    for (std::size_t t = 0; t < n2; ++t) out[t] = residual[free[t]];
    return out;
  };

  Matrix pi(n2, n1);
  for (std::size_t i = 0; i < n1; ++i) {
    Vector col = project(a.basis_vector(i));
    for (std::size_t t = 0; t < n2; ++t) pi.at(t, i) = col[t];
  }
  Matrix section(n1, n2);
  for (std::size_t t = 0; t < n2; ++t) section.at(free[t], t) = 1;

  std::vector<Scalar> mu2(n2 * n2 * n2, Scalar(0));
  for (std::size_t s = 0; s < n2; ++s)
    for (std::size_t t = 0; t < n2; ++t) {
      Vector p = project(a.basis_product(free[s], free[t]));
      for (std::size_t m = 0; m < n2; ++m) mu2[(s * n2 + t) * n2 + m] = p[m];
    }
  Matrix alpha2 = pi * a.alpha() * section;
  HomAlgebra target(n2, std::move(mu2), alpha2, a.name() + "/K");

  // Well-definedness on basis representatives.
  if (pi * a.alpha() != alpha2 * pi)
    throw std::logic_error("quotient: twist does not descend");
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      Vector lhs = pi.apply(a.basis_product(i, j));
      Vector rhs = target.multiply(pi.col(i), pi.col(j));
      if (lhs != rhs) throw std::logic_error("quotient: product does not descend");
    }
  return {a, k, std::move(target), std::move(pi), std::move(section)};
}

}  // namespace hja
