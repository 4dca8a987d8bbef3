#include "doctest.h"
#include "hja/centroid.hpp"
#include "hja/corpus.hpp"

using namespace hja;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("composition table") {
  CentroidTable ab = centroid_composition_table(HomAlgebra::abelian(2), 2);
  CHECK(ab.total.dim() == 4);  // full commutant
  CHECK(ab.closed);

  CentroidTable u = centroid_composition_table(unital_dim1(), 2);
  CHECK(u.total.dim() == 1);  // scalars
  CHECK(u.closed);
  CHECK((*u.table[0][0])[0] == 1);  // id o id = id

  CentroidTable dn = centroid_composition_table(dual_numbers(), 2);
  CHECK(dn.total.dim() >= 1);
  CHECK(dn.closed);
}

TEST_CASE("idempotent from a decomposition into ideals") {
  HomAlgebra uu = direct_sum(unital_dim1(), unital_dim1());
  Subspace v1 = Subspace::span({vec({1, 0})}, 2);
  Subspace v2 = Subspace::span({vec({0, 1})}, 2);
  CentroidElement e1 = idempotent_from_decomposition(uu, v1, v2);
  CHECK(e1.k == 0);
  Matrix expect(2, 2);
  expect.at(0, 0) = 1;
  CHECK(e1.matrix == expect);

  // whole algebra against zero gives the identity
  CentroidElement all = idempotent_from_decomposition(
      uu, Subspace::full(2), Subspace(2));
  CHECK(all.matrix == Matrix::identity(2));

  // abelian algebras split along any pair of complementary subspaces
  HomAlgebra ab = HomAlgebra::abelian(2);
  CentroidElement p = idempotent_from_decomposition(
      ab, Subspace::span({vec({1, 1})}, 2), Subspace::span({vec({1, -1})}, 2));
  CHECK((p.matrix * p.matrix) == p.matrix);

  // non-ideal input is rejected
  HomAlgebra d = dual_numbers();
  CHECK_THROWS(idempotent_from_decomposition(
      d, Subspace::span({vec({1, 0})}, 2), Subspace::span({vec({0, 1})}, 2)));
}

TEST_CASE("decomposition from an idempotent and the round trip") {
  HomAlgebra uu = direct_sum(unital_dim1(), unital_dim1());
  auto [ker, im] = decomposition_from_idempotent(
      uu, CentroidElement{Matrix::identity(2), 0});
  CHECK(ker.dim() == 0);
  CHECK(im == Subspace::full(2));

  auto [kz, iz] = decomposition_from_idempotent(uu, CentroidElement{Matrix(2, 2), 0});
  CHECK(kz == Subspace::full(2));
  CHECK(iz.dim() == 0);

  Subspace v1 = Subspace::span({vec({1, 0})}, 2);
  Subspace v2 = Subspace::span({vec({0, 1})}, 2);
  auto [k2, i2] = decomposition_from_idempotent(
      uu, idempotent_from_decomposition(uu, v1, v2));
  CHECK(k2 == v2);
  CHECK(i2 == v1);

  // the round trip on explicit direct sums of corpus algebras
  std::vector<HomAlgebra> small = {unital_dim1(), dual_numbers(), sym2_jordan()};
  for (const auto& a1 : small)
    for (const auto& a2 : small) {
      HomAlgebra s = direct_sum(a1, a2);
      std::size_t n1 = a1.dim(), n = s.dim();
      std::vector<Vector> b1, b2;
      for (std::size_t i = 0; i < n1; ++i) b1.push_back(s.basis_vector(i));
      for (std::size_t i = n1; i < n; ++i) b2.push_back(s.basis_vector(i));
      Subspace f1 = Subspace::span(b1, n), f2 = Subspace::span(b2, n);
      auto [kk, ii] = decomposition_from_idempotent(
          s, idempotent_from_decomposition(s, f1, f2));
      CHECK(kk == f2);
      CHECK(ii == f1);
    }

  // a non-centroid idempotent is rejected
  HomAlgebra d = dual_numbers();
  Matrix proj(2, 2);
  proj.at(0, 0) = 1;
  CHECK_THROWS(decomposition_from_idempotent(d, CentroidElement{proj, 0}));
}

TEST_CASE("twisted symmetry against invariant forms") {
  Verdict u = verify_form_symmetry(unital_dim1(), 2);
  CHECK(u.preconditions_met);
  CHECK(u.holds);
  Verdict dn = verify_form_symmetry(dual_numbers(), 2);
  CHECK(dn.preconditions_met);
  CHECK(dn.holds);
  Verdict ab = verify_form_symmetry(HomAlgebra::abelian(2), 2);
  CHECK(!ab.preconditions_met);  // not perfect
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    Verdict v = verify_form_symmetry(a, 2);
    CHECK(!v.applicable_failure());
    CHECK(v.preconditions_met == a.is_perfect());
  }
}

TEST_CASE("annihilator of a subset") {
  HomAlgebra d = dual_numbers();
  CHECK(z_of_subset(d, Subspace(2)) == Subspace::full(2));
  CHECK(z_of_subset(d, Subspace::full(2)) == d.centralizer());
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  CHECK(z_of_subset(d, f_span) == f_span);
}

TEST_CASE("centroid invariance of annihilators and perfect ideals") {
  HomAlgebra d = dual_numbers();
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  Verdict v = verify_annihilator_invariance(d, f_span, 2);
  CHECK(v.preconditions_met);
  CHECK(v.holds);

  // five corpus instances with valid preconditions
  std::size_t applicable = 0;
  for (const auto& a : corpus()) {
    CAPTURE(a.name());
    for (const Subspace& i : {Subspace(a.dim()), Subspace::full(a.dim()),
                              a.product_full(), a.centralizer()}) {
      Verdict w = verify_annihilator_invariance(a, i, 2);
      CHECK(!w.applicable_failure());
      if (w.preconditions_met) ++applicable;
    }
  }
  CHECK(applicable >= 5);
}

TEST_CASE("scalar centroid forces the identity twist") {
  Verdict s = verify_scalar_centroid_twist(sym2_jordan(), 2);
  CHECK(s.preconditions_met);
  CHECK(s.holds);

  HomAlgebra u = unital_dim1();
  u.flags().asserted_simple = true;
  Verdict vu = verify_scalar_centroid_twist(u, 2);
  CHECK(vu.preconditions_met);
  CHECK(vu.holds);

  // unflagged algebras gate out
  CHECK(!verify_scalar_centroid_twist(dual_numbers(), 2).preconditions_met);
  // flagged but non-simple: the evidence check rejects the flag
  HomAlgebra d = dual_numbers();
  d.flags().asserted_simple = true;
  Verdict vd = verify_scalar_centroid_twist(d, 2);
  CHECK(!vd.preconditions_met);
  CHECK(vd.note.find("evidence") != std::string::npos);
}

TEST_CASE("induced maps on a quotient") {
  HomAlgebra d = dual_numbers();
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  QuotientMap q = quotient(d, f_span);

  CHECK(induced_map(q, Matrix::identity(2)).induced_op ==
        Matrix::identity(1));
  CHECK(induced_map(q, d.alpha()).induced_op == q.target.alpha());

  Matrix le = d.left_multiplication(vec({1, 0}));
  CHECK(induced_map(q, le).induced_op ==
        q.target.left_multiplication(q.pi.col(0)));

  // an operator moving the ideal out of itself is rejected
  Matrix bad(2, 2);
  bad.at(0, 1) = 1;  // f -> e
  CHECK_THROWS(induced_map(q, bad));
}

TEST_CASE("multiplication span") {
  CHECK(mult_span(HomAlgebra::abelian(2)).dim() == 0);
  Subspace u = mult_span(unital_dim1());
  CHECK(u.dim() == 1);
  CHECK(u.contains(Matrix::identity(1).flatten()));
  CHECK(mult_span(dual_numbers()).dim() == 2);
}

TEST_CASE("ideal-preserving restriction") {
  HomAlgebra d = dual_numbers();
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  Subspace all_ops = Subspace::full(4);
  Subspace keep = ideal_preserving(d, f_span, all_ops);
  // operators with zero (0,1) entry: f stays in span{f}
  CHECK(keep.dim() == 3);
  Matrix bad(2, 2);
  bad.at(0, 1) = 1;
  CHECK(!keep.contains(bad.flatten()));
}

TEST_CASE("quotient-induced operator maps") {
  // trivial ideal: everything reduces to the identity quotient
  HomAlgebra d = dual_numbers();
  QuotientMap triv = quotient(d, Subspace(2));
  std::vector<Verdict> tv = verify_quotient_induced_maps(triv, 2);
  CHECK(tv.size() == 5);
  for (const auto& v : tv) CHECK(!v.applicable_failure());
  // perfect source with kernel inside the (trivial) centralizer: the
  // injectivity item applies and holds
  CHECK(tv[3].preconditions_met);
  CHECK(tv[3].holds);
  CHECK(tv[4].preconditions_met);
  CHECK(tv[4].holds);

  // proper ideal of the dual numbers
  Subspace f_span = Subspace::span({vec({0, 1})}, 2);
  std::vector<Verdict> fv = verify_quotient_induced_maps(quotient(d, f_span), 2);
  for (const auto& v : fv) {
    CAPTURE(v.claim_id);
    CHECK(!v.applicable_failure());
  }
  CHECK(fv[0].preconditions_met);  // homomorphism laws
  CHECK(fv[0].holds);
  CHECK(fv[1].holds);
  CHECK(fv[2].holds);
  CHECK(!fv[3].preconditions_met);  // kernel not inside the centralizer

  // kernel equal to the centralizer: the invariance item instantiates fully
  HomAlgebra ua = direct_sum(unital_dim1(), HomAlgebra::abelian(1));
  QuotientMap qa = quotient(ua, ua.centralizer());
  std::vector<Verdict> av = verify_quotient_induced_maps(qa, 2);
  for (const auto& v : av) CHECK(!v.applicable_failure());
  CHECK(av[4].preconditions_met);
  CHECK(av[4].holds);
  CHECK(av[4].note.find("centralizer") != std::string::npos);
}
