#include "doctest.h"
#include "hja/subspace.hpp"
#include "test_util.hpp"

using namespace hja;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

Subspace span1(std::initializer_list<long> v, std::size_t n) {
  return Subspace::span({vec(v)}, n);
}

}  // namespace

TEST_CASE("rref of a rank-deficient matrix") {
  Matrix m = Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2);
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.mat.at(0, 0) == 1);
  CHECK(r.mat.at(0, 1) == 2);
  CHECK(is_zero(r.mat.at(1, 0)));
  CHECK(is_zero(r.mat.at(1, 1)));
}

TEST_CASE("rref of identity and zero matrices") {
  Matrix id = Matrix::identity(3);
  RrefResult r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.mat == id);
  CHECK(rref(Matrix(2, 3)).rank == 0);
}

TEST_CASE("nullspace examples") {
  Matrix m = Matrix::from_rows({vec({1, 2}), vec({2, 4})}, 2);
  Subspace ns = nullspace(m);
  CHECK(ns.dim() == 1);
  CHECK(ns == span1({-2, 1}, 2));
  CHECK(nullspace(Matrix::identity(4)).dim() == 0);
  CHECK(nullspace(Matrix(1, 3)).dim() == 3);
}

TEST_CASE("subspace sum") {
  Subspace e1 = span1({1, 0}, 2), e2 = span1({0, 1}, 2);
  CHECK(subspace_sum(e1, e2) == Subspace::full(2));
  CHECK(subspace_sum(e1, e1) == e1);
  Subspace s = span1({1, 1, 0}, 3);
  Subspace t = Subspace::span({vec({1, 1, 0}), vec({0, 0, 1})}, 3);
  Subspace u = subspace_sum(s, t);
  CHECK(u == t);
  CHECK(u.contains(s));
  CHECK(t.contains(u));
}

TEST_CASE("subspace intersection") {
  Subspace e1 = span1({1, 0}, 2), e2 = span1({0, 1}, 2);
  CHECK(subspace_intersect(e1, e1) == e1);
  CHECK(subspace_intersect(e1, e2).dim() == 0);
  Subspace diag = span1({1, 1}, 2);
  CHECK(subspace_intersect(Subspace::full(2), diag) == diag);
}

TEST_CASE("membership, equality, directness") {
  Subspace e1 = span1({1, 0}, 2);
  CHECK(e1.contains(vec({1, 0})));
  CHECK(!e1.contains(vec({1, 1})));
  CHECK(is_direct(e1, span1({1, 1}, 2)));
  CHECK(span1({2, 0}, 2) == span1({1, 0}, 2));
}

TEST_CASE("complement picks non-pivot standard vectors") {
  CHECK(complement(Subspace(2)) == Subspace::full(2));
  CHECK(complement(Subspace::full(2)).dim() == 0);
  // pivot of span{(1,1)} is column 0, so the complement is e2
  CHECK(complement(span1({1, 1}, 2)) == span1({0, 1}, 2));
}

TEST_CASE("ambient mismatch is rejected") {
  CHECK_THROWS(subspace_sum(Subspace(2), Subspace(3)));
  CHECK_THROWS(subspace_intersect(Subspace(2), Subspace(3)));
}

TEST_CASE("nullspace vectors are exact kernel elements with rank-nullity") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix m = testutil::random_matrix(rng, dim(rng), dim(rng));
    RrefResult r = rref(m);
    Subspace ns = nullspace(m);
    CHECK(ns.dim() + r.rank == m.cols());
    for (std::size_t i = 0; i < ns.dim(); ++i) {
      Vector prod = m.apply(ns.basis_vector(i));
      for (const auto& e : prod) CHECK(is_zero(e));
    }
  }
}

TEST_CASE("Grassmann dimension identity on random subspace pairs") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> dim(1, 10);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = dim(rng);
    Subspace s1 = testutil::random_subspace(rng, n);
    Subspace s2 = testutil::random_subspace(rng, n);
    Subspace sum = subspace_sum(s1, s2);
    Subspace meet = subspace_intersect(s1, s2);
    CHECK(sum.dim() + meet.dim() == s1.dim() + s2.dim());
    CHECK(sum.contains(s1));
    CHECK(sum.contains(s2));
    CHECK(s1.contains(meet));
    CHECK(s2.contains(meet));
    // equality agrees with double containment
    CHECK((s1 == s2) == (s1.contains(s2) && s2.contains(s1)));
    // complement is always a direct summand
    Subspace comp = complement(s1);
    CHECK(is_direct(s1, comp));
    CHECK(subspace_sum(s1, comp) == Subspace::full(n));
  }
}
