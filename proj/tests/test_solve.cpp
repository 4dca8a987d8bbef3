#include "doctest.h"
#include "hja/corpus.hpp"
#include "hja/solve.hpp"
#include "oracle.hpp"

using namespace hja;

TEST_CASE("commutant") {
  CHECK(commutant(HomAlgebra::abelian(2)).dim() == 4);

  Matrix diag12 = Matrix::identity(2);
  diag12.at(1, 1) = 2;
  HomAlgebra a(2, HomAlgebra::abelian(2).mu_tensor(), diag12);
  MapSpace w = commutant(a);
  CHECK(w.dim() == 2);  // diagonal matrices

  Matrix jord(2, 2);
  jord.at(0, 1) = 1;
  HomAlgebra b(2, HomAlgebra::abelian(2).mu_tensor(), jord);
  CHECK(commutant(b).dim() == 2);  // polynomials in the Jordan block
}

TEST_CASE("der_k hand examples") {
  for (std::size_t k = 0; k <= 2; ++k)
    CHECK(der_k(HomAlgebra::abelian(2), k).dim() == 4);

  CHECK(der_k(unital_dim1(), 0).dim() == 0);  // d = 2d forces d = 0

  MapSpace d = der_k(dual_numbers(), 0);
  CHECK(d.dim() == 1);
  Matrix gen(2, 2);
  gen.at(1, 1) = 1;  // e -> 0, f -> f
  CHECK(d.contains_operator(gen));
}

TEST_CASE("gder_k and qder_k hand examples") {
  auto [g, gw] = gder_k(unital_dim1(), 0);
  CHECK(g.dim() == 1);  // any d, with d'' = d + d'
  CHECK(gw.triple_space.dim() == 2);
  CHECK(gder_k(HomAlgebra::abelian(2), 0).first.dim() == 4);

  auto [q, qw] = qder_k(unital_dim1(), 0);
  CHECK(q.dim() == 1);  // d' = 2d
  CHECK(qw.pair_space.dim() == 1);
  Vector pair = qw.pair_space.basis_vector(0);
  CHECK(pair[1] == 2 * pair[0]);
}

TEST_CASE("c, qc, zder hand examples") {
  CHECK(c_k(unital_dim1(), 0).dim() == 1);
  CHECK(qc_k(unital_dim1(), 0).dim() == 1);
  CHECK(zder_k(unital_dim1(), 0).dim() == 0);

  HomAlgebra ab = HomAlgebra::abelian(2);
  CHECK(zder_k(ab, 0).dim() == 4);
  CHECK(c_k(ab, 0).dim() == 4);
  CHECK(qc_k(ab, 0).dim() == 4);

  // identity operator is in C_0 of every multiplicative algebra
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    CHECK(c_k(a, 0).contains_operator(Matrix::identity(a.dim())));
  }
}

TEST_CASE("aggregate") {
  // alpha = id: all per-k spaces coincide, sum is not direct unless zero
  Aggregate der_dual = aggregate(dual_numbers(), SpaceKind::Der, 2);
  CHECK(der_dual.per_k.size() == 3);
  for (const auto& m : der_dual.per_k) CHECK(m.space == der_dual.total);
  CHECK(!der_dual.direct);

  Aggregate der_u = aggregate(unital_dim1(), SpaceKind::Der, 2);
  CHECK(der_u.total.dim() == 0);
  CHECK(der_u.direct);

  // every per-k generator is a member of the total
  Aggregate qc_tw = aggregate(dual_numbers_twisted(Scalar(2)), SpaceKind::QC, 2);
  for (const auto& m : qc_tw.per_k)
    for (std::size_t i = 0; i < m.dim(); ++i)
      CHECK(qc_tw.total.contains(m.space.basis_vector(i)));
}

TEST_CASE("operator products") {
  Matrix a(2, 2), b(2, 2);
  a.at(0, 1) = 1;
  b.at(1, 0) = 1;
  CHECK(nu_prime(a, a).is_zero());
  CHECK(nu(Matrix::identity(2), Matrix::identity(2)) ==
        Matrix::identity(2).scaled(Scalar(2)));
  CHECK(sigma_op(dual_numbers(), a) == a);
  CHECK(nu(a, b) == Matrix::identity(2));
  CHECK_THROWS(nu(a, Matrix::identity(3)));
}

TEST_CASE("soundness: solver bases satisfy their identities") {
  std::vector<SpaceKind> kinds = {SpaceKind::Der, SpaceKind::GDer,
                                  SpaceKind::QDer, SpaceKind::C,
                                  SpaceKind::QC, SpaceKind::ZDer};
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    for (SpaceKind kind : kinds)
      for (std::size_t k = 0; k <= 2; ++k) {
        MapSpace m = solve_space(a, kind, k);
        for (std::size_t i = 0; i < m.dim(); ++i)
          CHECK(satisfies_identity(a, kind, k, m.basis_operator(i, a.dim())));
      }
  }
}

TEST_CASE("completeness: independent assembly and elimination agree") {
  std::vector<SpaceKind> kinds = {SpaceKind::Der, SpaceKind::GDer,
                                  SpaceKind::QDer, SpaceKind::C,
                                  SpaceKind::QC, SpaceKind::ZDer};
  for (const auto& a : corpus()) {
    if (a.dim() > 3) continue;
    CAPTURE(a.name());
    for (SpaceKind kind : kinds)
      for (std::size_t k = 0; k <= 2; ++k)
        CHECK(solve_space(a, kind, k).space == oracle::oracle_space(a, kind, k));
  }
}

TEST_CASE("definitional chain ZDer <= Der <= QDer <= GDer per k") {
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    for (std::size_t k = 0; k <= 2; ++k) {
      Subspace z = zder_k(a, k).space;
      Subspace d = der_k(a, k).space;
      Subspace q = qder_k(a, k).first.space;
      Subspace g = gder_k(a, k).first.space;
      CHECK(d.contains(z));
      CHECK(q.contains(d));
      CHECK(g.contains(q));
      CHECK(g.contains(c_k(a, k).space));
    }
  }
}

TEST_CASE("commutator of derivations is a derivation at summed power") {
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    for (std::size_t k = 0; k <= 1; ++k)
      for (std::size_t s = 0; s <= 1; ++s) {
        MapSpace dk = der_k(a, k), ds = der_k(a, s);
        MapSpace dks = der_k(a, k + s);
        for (std::size_t i = 0; i < dk.dim(); ++i)
          for (std::size_t j = 0; j < ds.dim(); ++j) {
            Matrix bracket = nu_prime(dk.basis_operator(i, a.dim()),
                                      ds.basis_operator(j, a.dim()));
            CHECK(dks.contains_operator(bracket));
          }
      }
  }
}

TEST_CASE("gder witness consistency") {
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    std::size_t n = a.dim();
    auto [g, w] = gder_k(a, 1);
    // projection of every witness lies in the published space
    std::vector<Vector> projected;
    for (std::size_t i = 0; i < w.triple_space.dim(); ++i) {
      Vector full = w.triple_space.basis_vector(i);
      Vector d(full.begin(), full.begin() + n * n);
      CHECK(g.space.contains(d));
    }
    // and every published generator extends back to a witness
    for (std::size_t i = 0; i < g.dim(); ++i)
      CHECK(satisfies_identity(a, SpaceKind::GDer, 1, g.basis_operator(i, n)));
  }
}
