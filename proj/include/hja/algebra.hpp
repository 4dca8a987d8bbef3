#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hja/subspace.hpp"

namespace hja {

struct AlgebraFlags {
  bool commutative_checked = false;
  bool hom_jordan_checked = false;
  bool multiplicative_checked = false;
  bool asserted_simple = false;
};

// First failing basis tuple of an identity check.
struct CheckReport {
  bool ok = true;
  std::vector<std::size_t> failing_tuple;  // empty when ok
};

// Finite-dimensional Hom-Jordan algebra given by structure constants and a
// twist map: mu(e_i, e_j) = sum_k c[i][j][k] e_k, twist alpha as an n x n
// matrix.
class HomAlgebra {
 public:
  HomAlgebra(std::size_t n, std::vector<Scalar> mu_tensor, Matrix alpha,
             std::string name = "", AlgebraFlags flags = {});

  static HomAlgebra abelian(std::size_t n, std::string name = "abelian");

  std::size_t dim() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const Matrix& alpha() const { return alpha_; }
  const AlgebraFlags& flags() const { return flags_; }
  AlgebraFlags& flags() { return flags_; }
  const std::vector<Scalar>& mu_tensor() const { return mu_; }

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mu_[(i * n_ + j) * n_ + k];
  }

  Vector multiply(const Vector& x, const Vector& y) const;
  Vector basis_product(std::size_t i, std::size_t j) const;
  Matrix left_multiplication(const Vector& x) const;  // L_x : y -> mu(x, y)
  Vector basis_vector(std::size_t i) const;

  bool check_commutative() const;
  bool check_multiplicative() const;
  CheckReport check_multiplicative_report() const;
  // Full trilinear linearization of the Hom-Jordan identity over all basis
  // 4-tuples; over Q this is equivalent to the original cubic identity.
  CheckReport check_hom_jordan() const;
  // Direct evaluation of the non-linearized identity on one pair, for oracles.
  Vector hom_jordan_residual(const Vector& x, const Vector& y) const;

  Subspace centralizer() const;
  Subspace product_subspace(const Subspace& s1, const Subspace& s2) const;
  Subspace product_full() const;  // mu(V, V)
  bool is_perfect() const;

  bool is_hom_ideal(const Subspace& s) const;
  bool is_hom_subalgebra(const Subspace& s) const;
  Subspace ideal_closure(const Subspace& seed) const;

 private:
  std::size_t n_;
  std::vector<Scalar> mu_;  // (i*n + j)*n + k
  Matrix alpha_;
  std::string name_;
  AlgebraFlags flags_;
};

HomAlgebra direct_sum(const HomAlgebra& a1, const HomAlgebra& a2);

// Yau twist (V, beta o mu, beta o alpha); beta must be a morphism of (V, mu)
// commuting with alpha.
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta);

// {W in End(V) : W alpha = alpha W} as a subspace of row-major flattened
// operators.
Subspace alpha_commutant(const Matrix& alpha);

// The Hom-Jordan algebra on the commutant of alpha with the anticommutator
// product and sigma(w) = alpha o w, in the canonical commutant basis.
HomAlgebra commutant_plus_algebra(const Matrix& alpha);

struct BilinearForm {
  Matrix gram;  // f(e_i, e_j) = gram[i][j]
};

// Basis of the space of invariant bilinear forms f(mu(x,y),z) = f(x,mu(y,z)).
std::vector<BilinearForm> invariant_forms(const HomAlgebra& a);

struct QuotientMap {
  HomAlgebra source;
  Subspace ideal;      // K = ker(pi), a Hom-ideal of source
  HomAlgebra target;   // source / K
  Matrix pi;           // n2 x n1 projection
  Matrix section;      // n1 x n2, pi * section = id
};

QuotientMap quotient(const HomAlgebra& a, const Subspace& k);

}  // namespace hja
