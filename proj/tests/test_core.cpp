#include "doctest.h"
#include "hja/corpus.hpp"
#include "test_util.hpp"

using namespace hja;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("multiply") {
  HomAlgebra ab = HomAlgebra::abelian(2);
  CHECK(ab.multiply(vec({3, 4}), vec({5, 6})) == vec({0, 0}));

  HomAlgebra u = unital_dim1();
  CHECK(u.multiply(vec({1}), vec({1})) == vec({1}));

  // dual numbers: (e+f)(e+f) = e + 2f
  HomAlgebra d = dual_numbers();
  CHECK(d.multiply(vec({1, 1}), vec({1, 1})) == vec({1, 2}));
  CHECK_THROWS(d.multiply(vec({1}), vec({1, 1})));
}

TEST_CASE("commutativity and multiplicativity checks") {
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    CHECK(a.check_commutative());
    // twisting the commutant product by a non-identity diagonal alpha breaks
    // multiplicativity: the two sides pick up different powers of alpha
    bool multiplicative = a.name() != "commutant-plus-diag12" &&
                          a.name() != "commutant-plus-diag123";
    CHECK(a.check_multiplicative() == multiplicative);
  }
  // artificial non-commutative tensor
  std::vector<Scalar> mu(8, Scalar(0));
  mu[(0 * 2 + 1) * 2 + 0] = 1;  // c[0][1][0] = 1, c[1][0][0] = 0
  HomAlgebra bad(2, std::move(mu), Matrix::identity(2));
  CHECK(!bad.check_commutative());

  // dual numbers with alpha(e) = e + f is not multiplicative
  Matrix alpha = Matrix::identity(2);
  alpha.at(1, 0) = 1;
  HomAlgebra d(2, dual_numbers().mu_tensor(), alpha);
  CheckReport rep = d.check_multiplicative_report();
  CHECK(!rep.ok);
  CHECK(rep.failing_tuple == std::vector<std::size_t>{0, 0});
}

TEST_CASE("hom-jordan identity checker") {
  CHECK(HomAlgebra::abelian(3).check_hom_jordan().ok);
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    CHECK(a.check_hom_jordan().ok);
  }
  // oracle: direct evaluation of the non-linearized identity on random pairs
  HomAlgebra tw = dual_numbers_twisted(Scalar(3));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    Vector x = testutil::random_vector(rng, 2);
    Vector y = testutil::random_vector(rng, 2);
    Vector r = tw.hom_jordan_residual(x, y);
    for (const auto& e : r) CHECK(is_zero(e));
  }
}

TEST_CASE("left multiplication operator") {
  CHECK(HomAlgebra::abelian(2).left_multiplication(vec({1, 1})).is_zero());
  CHECK(unital_dim1().left_multiplication(vec({1})) == Matrix::identity(1));
  // L_f sends e to f and f to 0
  Matrix lf = dual_numbers().left_multiplication(vec({0, 1}));
  CHECK(lf.col(0) == vec({0, 1}));
  CHECK(lf.col(1) == vec({0, 0}));
}

TEST_CASE("centralizer") {
  CHECK(HomAlgebra::abelian(2).centralizer().dim() == 2);
  CHECK(unital_dim1().centralizer().dim() == 0);
  CHECK(dual_numbers().centralizer().dim() == 0);
}

TEST_CASE("product subspace and perfectness") {
  CHECK(HomAlgebra::abelian(2).product_full().dim() == 0);
  CHECK(!HomAlgebra::abelian(2).is_perfect());
  CHECK(unital_dim1().is_perfect());
  HomAlgebra d = dual_numbers();
  CHECK(d.product_full() == Subspace::full(2));
  CHECK(d.is_perfect());
}

TEST_CASE("hom-ideals and subalgebras of the dual numbers") {
  HomAlgebra d = dual_numbers();
  Subspace zero(2);
  CHECK(d.is_hom_ideal(zero));
  CHECK(d.is_hom_ideal(Subspace::full(2)));
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  Subspace e_span = Subspace::span({vec({1, 0})}, 2);
  CHECK(d.is_hom_ideal(f_span));
  CHECK(d.is_hom_subalgebra(e_span));
  CHECK(!d.is_hom_ideal(e_span));
}

TEST_CASE("ideal closure") {
  HomAlgebra d = dual_numbers();
  CHECK(d.ideal_closure(Subspace::full(2)) == Subspace::full(2));
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  CHECK(d.ideal_closure(f_span) == f_span);
  Subspace e_span = Subspace::span({vec({1, 0})}, 2);
  CHECK(d.ideal_closure(e_span) == Subspace::full(2));
}

TEST_CASE("direct sum") {
  HomAlgebra s = direct_sum(HomAlgebra::abelian(2), HomAlgebra::abelian(3));
  CHECK(s.dim() == 5);
  CHECK(s.centralizer().dim() == 5);

  // Z(V1 + V2) = Z(V1) x Z(V2)
  HomAlgebra mix = direct_sum(dual_numbers(), HomAlgebra::abelian(2));
  Subspace z = mix.centralizer();
  CHECK(z.dim() == 2);
  CHECK(z.contains(vec({0, 0, 1, 0})));
  CHECK(z.contains(vec({0, 0, 0, 1})));

  // each embedded summand is a Hom-ideal
  HomAlgebra uu = direct_sum(unital_dim1(), unital_dim1());
  CHECK(uu.is_hom_ideal(Subspace::span({vec({1, 0})}, 2)));
  CHECK(uu.is_hom_ideal(Subspace::span({vec({0, 1})}, 2)));
}

TEST_CASE("yau twist") {
  HomAlgebra d = dual_numbers();
  HomAlgebra same = yau_twist(d, Matrix::identity(2));
  CHECK(same.mu_tensor() == d.mu_tensor());
  CHECK(same.alpha() == d.alpha());

  HomAlgebra tw = dual_numbers_twisted(Scalar(2));
  CHECK(tw.check_hom_jordan().ok);
  CHECK(tw.check_multiplicative());
  CHECK(tw.alpha() != Matrix::identity(2));

  // not a morphism: beta(e) = 2e fails beta(e*e) = beta(e)^2
  Matrix bad = Matrix::identity(2);
  bad.at(0, 0) = 2;
  CHECK_THROWS(yau_twist(d, bad));
}

TEST_CASE("commutant plus-algebra") {
  HomAlgebra full = commutant_plus_algebra(Matrix::identity(2));
  CHECK(full.dim() == 4);
  CHECK(full.check_hom_jordan().ok);

  Matrix diag12 = Matrix::identity(2);
  diag12.at(1, 1) = 2;
  HomAlgebra diag = commutant_plus_algebra(diag12);
  CHECK(diag.dim() == 2);
  CHECK(diag.check_hom_jordan().ok);

  // nilpotent Jordan block: commutant is the polynomials in alpha, dim 2
  Matrix jord(2, 2);
  jord.at(0, 1) = 1;
  CHECK(commutant_plus_algebra(jord).dim() == 2);
}

TEST_CASE("invariant forms") {
  CHECK(invariant_forms(HomAlgebra::abelian(2)).size() == 4);
  CHECK(invariant_forms(unital_dim1()).size() == 1);

  HomAlgebra d = dual_numbers();
  auto forms = invariant_forms(d);
  CHECK(!forms.empty());
  for (const auto& f : forms)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) {
          // f(mu(ei,ej), el) = f(ei, mu(ej,el))
          Vector p = d.basis_product(i, j);
          Vector q = d.basis_product(j, l);
          Scalar lhs(0), rhs(0);
          for (std::size_t k = 0; k < 2; ++k) {
            lhs += p[k] * f.gram.at(k, l);
            rhs += q[k] * f.gram.at(i, k);
          }
          CHECK(lhs == rhs);
        }
}

TEST_CASE("quotient") {
  HomAlgebra d = dual_numbers();
  QuotientMap triv = quotient(d, Subspace(2));
  CHECK(triv.target.dim() == 2);
  CHECK(triv.pi == Matrix::identity(2));

  QuotientMap all = quotient(d, Subspace::full(2));
  CHECK(all.target.dim() == 0);

  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  QuotientMap q = quotient(d, f_span);
  CHECK(q.target.dim() == 1);
  CHECK(q.target.c(0, 0, 0) == 1);  // unital quotient

  // pi is an algebra map on random pairs
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Vector x = testutil::random_vector(rng, 2);
    Vector y = testutil::random_vector(rng, 2);
    CHECK(q.pi.apply(d.multiply(x, y)) ==
          q.target.multiply(q.pi.apply(x), q.pi.apply(y)));
  }
  CHECK(q.pi * d.alpha() == q.target.alpha() * q.pi);

  Subspace e_span = Subspace::span({vec({1, 0})}, 2);
  CHECK_THROWS(quotient(d, e_span));
}

TEST_CASE("centralizer of a multiplicative algebra is a Hom-ideal") {
  for (const auto& a : corpus()) {
    if (!is_invertible(a.alpha())) continue;
    CAPTURE(a.name());
    CHECK(a.is_hom_ideal(a.centralizer()));
  }
}

TEST_CASE("zero-dimensional algebra") {
  HomAlgebra z = HomAlgebra::abelian(0);
  CHECK(z.check_hom_jordan().ok);
  CHECK(z.centralizer().dim() == 0);
  CHECK(z.is_perfect());
}
