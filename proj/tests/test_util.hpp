#pragma once

#include <random>

#include "hja/subspace.hpp"

namespace hja::testutil {

inline Scalar random_scalar(std::mt19937_64& rng, long max_num = 100,
                            long max_den = 100) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_scalar(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                            std::size_t cols, long max_num = 100,
                            long max_den = 100) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = random_scalar(rng, max_num, max_den);
  return m;
}

inline Vector random_vector(std::mt19937_64& rng, std::size_t n,
                            long max_num = 10, long max_den = 10) {
  Vector v(n);
  for (auto& e : v) e = random_scalar(rng, max_num, max_den);
  return v;
}

inline Subspace random_subspace(std::mt19937_64& rng, std::size_t ambient) {
  std::uniform_int_distribution<std::size_t> count(0, ambient);
  std::vector<Vector> rows;
  std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i)
    rows.push_back(random_vector(rng, ambient));
  return Subspace::span(rows, ambient);
}

}  // namespace hja::testutil
