#pragma once

#include "hja/theorems.hpp"

namespace hja {

// Nilpotent polynomial extension of a base algebra on carrier V t + V t^2:
// products add degrees, degree three and above vanish, the twist acts
// degree-wise. Basis order: e_1 t .. e_n t, e_1 t^2 .. e_n t^2.
struct ExtendedAlgebra {
  HomAlgebra base;
  HomAlgebra carrier;     // dim 2n
  Subspace product_part;  // mu(V, V) inside the base
  Subspace u_complement;  // U with V = U (+) mu(V, V)
  Matrix proj_product;    // projection onto mu(V, V) along U
};

ExtendedAlgebra extend_algebra(const HomAlgebra& a);

// Embedding of a quasiderivation witness (D, D') as an operator on the
// carrier: D on the t-part, D' composed with the product projection on the
// t^2-part. Independent of the choice of D' because companions agree on
// mu(V, V).
Matrix phi(const ExtendedAlgebra& ext, const Matrix& d, const Matrix& dprime);

// The carrier of every valid base is itself valid (and multiplicative when
// the base is).
Verdict verify_extension_validity(const HomAlgebra& a);

// phi sends quasiderivation witnesses to derivations of the carrier,
// injectively on the published spaces, independently of the companion.
Verdict verify_embedding_derivations(const HomAlgebra& a, std::size_t max_power);

// For trivial centralizer and invertible twist: the carrier's centralizer is
// exactly the t^2 layer, and derivations of the carrier split as the phi
// image of the quasiderivations plus the central derivations, directly.
Verdict verify_carrier_decomposition(const HomAlgebra& a, std::size_t max_power);

std::vector<Verdict> extension_suite(const HomAlgebra& a, std::size_t max_power);

}  // namespace hja
