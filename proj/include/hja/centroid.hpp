#pragma once

#include "hja/theorems.hpp"

namespace hja {

// Operator in the power-k centroid: commutes with alpha and satisfies both
// centroid identities at power k.
struct CentroidElement {
  Matrix matrix;
  std::size_t k = 0;
};

// Aggregated centroid with its composition behaviour within the power bound.
struct CentroidTable {
  std::size_t max_power = 0;
  Subspace total{0};  // ambient n^2
  // coordinates of basis_i o basis_j in the total, absent when the
  // composition escapes the bound
  std::vector<std::vector<std::optional<Vector>>> table;
  bool closed = true;
};

CentroidTable centroid_composition_table(const HomAlgebra& a,
                                         std::size_t max_power);

// Projection onto v1 along v2 for a direct decomposition of the algebra into
// two ideals; the projection is a power-0 centroid idempotent.
CentroidElement idempotent_from_decomposition(const HomAlgebra& a,
                                              const Subspace& v1,
                                              const Subspace& v2);

// (kernel, image) of a centroid idempotent; both are ideals and the algebra
// splits as their direct sum.
std::pair<Subspace, Subspace> decomposition_from_idempotent(
    const HomAlgebra& a, const CentroidElement& psi);

// On a perfect algebra, every centroid element is symmetric with respect to
// every invariant bilinear form, up to the power-k twist.
Verdict verify_form_symmetry(const HomAlgebra& a, std::size_t max_power);

// {x : mu(x, y) = 0 for all y in i}.
Subspace z_of_subset(const HomAlgebra& a, const Subspace& i);

// The annihilator of an alpha-stable subset is invariant under the centroid;
// so is the subset itself when it is a perfect ideal.
Verdict verify_annihilator_invariance(const HomAlgebra& a, const Subspace& i,
                      std::size_t max_power);

// On an algebra with scalar centroid and verified simplicity evidence, the
// twist map is the identity.
Verdict verify_scalar_centroid_twist(const HomAlgebra& a, std::size_t max_power);

// f on the source together with the unique quotient operator fbar satisfying
// pi o f = fbar o pi.
struct InducedMap {
  Matrix source_op;
  Matrix induced_op;
};

InducedMap induced_map(const QuotientMap& q, const Matrix& f);

// Members of `ops` (flattened operators) mapping the ideal into itself.
Subspace ideal_preserving(const HomAlgebra& a, const Subspace& ideal,
                          const Subspace& ops);

// span{ L_x : x in V } as flattened operators.
Subspace mult_span(const HomAlgebra& a);

// Quotient-induced maps on operators: homomorphism laws, left
// multiplications map to left multiplications, ideal-preserving centroid
// elements descend to centroid elements, with injectivity and totality under
// the stated hypotheses.
std::vector<Verdict> verify_quotient_induced_maps(const QuotientMap& q, std::size_t max_power);

// All single-algebra claims of this module, with canonical ideal and
// quotient instances: the zero and full subspaces, the product subspace, the
// centralizer, and quotients by the zero ideal and by the centralizer.
std::vector<Verdict> centroid_suite(const HomAlgebra& a, std::size_t max_power);

}  // namespace hja
