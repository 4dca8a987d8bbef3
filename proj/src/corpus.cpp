#include "hja/corpus.hpp"

namespace hja {

namespace {

void set_c(std::vector<Scalar>& mu, std::size_t n, std::size_t i, std::size_t j,
           std::size_t k, const Scalar& v) {
  mu[(i * n + j) * n + k] = v;
  mu[(j * n + i) * n + k] = v;
}

}  // namespace

HomAlgebra unital_dim1() {
  std::vector<Scalar> mu(1, Scalar(1));
  return HomAlgebra(1, std::move(mu), Matrix::identity(1), "unital-dim1");
}

HomAlgebra dual_numbers() {
  std::size_t n = 2;
  std::vector<Scalar> mu(n * n * n, Scalar(0));
  set_c(mu, n, 0, 0, 0, Scalar(1));  // e*e = e
  set_c(mu, n, 0, 1, 1, Scalar(1));  // e*f = f
  return HomAlgebra(n, std::move(mu), Matrix::identity(n), "dual-numbers");
}

HomAlgebra dual_numbers_twisted(const Scalar& lambda) {
  Matrix beta = Matrix::identity(2);
  beta.at(1, 1) = lambda;
  HomAlgebra twisted = yau_twist(dual_numbers(), beta);
  return HomAlgebra(2, twisted.mu_tensor(), twisted.alpha(),
                    "dual-numbers-yau-" + format_scalar(lambda));
}

HomAlgebra sym2_jordan() {
  // basis: a = E11, b = E22, c = E12 + E21
  std::size_t n = 3;
  std::vector<Scalar> mu(n * n * n, Scalar(0));
  Scalar half(1, 2);
  set_c(mu, n, 0, 0, 0, Scalar(1));  // a*a = a
  set_c(mu, n, 1, 1, 1, Scalar(1));  // b*b = b
  set_c(mu, n, 0, 2, 2, half);       // a*c = c/2
  set_c(mu, n, 1, 2, 2, half);       // b*c = c/2
  set_c(mu, n, 2, 2, 0, Scalar(1));  // c*c = a + b
  set_c(mu, n, 2, 2, 1, Scalar(1));
  HomAlgebra a(n, std::move(mu), Matrix::identity(n), "sym2-jordan");
  a.flags().asserted_simple = true;
  return a;
}

std::vector<HomAlgebra> corpus() {
  Matrix diag12 = Matrix::identity(2);
  diag12.at(1, 1) = 2;
  Matrix diag123 = Matrix::identity(3);
  diag123.at(1, 1) = 2;
  diag123.at(2, 2) = 3;

  std::vector<HomAlgebra> out;
  out.push_back(HomAlgebra::abelian(1, "abelian-1"));
  out.push_back(HomAlgebra::abelian(2, "abelian-2"));
  out.push_back(HomAlgebra::abelian(3, "abelian-3"));
  out.push_back(unital_dim1());
  out.push_back(dual_numbers());
  out.push_back(dual_numbers_twisted(Scalar(2)));
  out.push_back(dual_numbers_twisted(Scalar(3)));
  out.push_back(sym2_jordan());

  HomAlgebra cp_id2 = commutant_plus_algebra(Matrix::identity(2));
  cp_id2.set_name("commutant-plus-id2");
  HomAlgebra cp12 = commutant_plus_algebra(diag12);
  cp12.set_name("commutant-plus-diag12");
  HomAlgebra cp123 = commutant_plus_algebra(diag123);
  cp123.set_name("commutant-plus-diag123");
  out.push_back(cp_id2);
  out.push_back(cp12);
  out.push_back(cp123);

  out.push_back(direct_sum(unital_dim1(), unital_dim1()));
  out.push_back(direct_sum(sym2_jordan(), unital_dim1()));
  out.push_back(direct_sum(dual_numbers(), dual_numbers()));
  out.push_back(direct_sum(unital_dim1(), HomAlgebra::abelian(1)));
  return out;
}

}  // namespace hja
