#pragma once

#include "hja/algebra.hpp"

namespace hja {

// Named example algebras used by the test corpus and the `gen` subcommand.

HomAlgebra unital_dim1();
// span{e, f}, e*e = e, e*f = f, f*f = 0, alpha = id
HomAlgebra dual_numbers();
// Yau twist of the dual numbers by beta = diag(1, lambda)
HomAlgebra dual_numbers_twisted(const Scalar& lambda);
// Symmetric 2x2 matrices with x*y = (xy + yx)/2; simple Jordan algebra
HomAlgebra sym2_jordan();

// The full corpus, deterministic order.
std::vector<HomAlgebra> corpus();

}  // namespace hja
