#pragma once

#include <utility>

#include "hja/algebra.hpp"

namespace hja {

enum class SpaceKind { Commutant, Der, GDer, QDer, C, QC, ZDer };

const char* kind_name(SpaceKind kind);
SpaceKind kind_from_name(const std::string& name);

// A linear subspace of End(V), operators flattened row-major to length n^2.
struct MapSpace {
  SpaceKind kind;
  std::size_t k = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains_operator(const Matrix& op) const {
    return space.contains(op.flatten());
  }
  Matrix basis_operator(std::size_t i, std::size_t n) const {
    return Matrix::unflatten(space.basis_vector(i), n);
  }
};

// Solution space in the concatenated unknowns (D, D', D'') of the generalized
// derivation system; projecting onto the D block gives the published space.
struct GDerWitness {
  Subspace triple_space;  // ambient 3 n^2
};

// (D, D') pairs of the quasiderivation system.
struct QDerWitness {
  Subspace pair_space;  // ambient 2 n^2
};

MapSpace commutant(const HomAlgebra& a);
MapSpace der_k(const HomAlgebra& a, std::size_t k);
std::pair<MapSpace, GDerWitness> gder_k(const HomAlgebra& a, std::size_t k);
std::pair<MapSpace, QDerWitness> qder_k(const HomAlgebra& a, std::size_t k);
MapSpace c_k(const HomAlgebra& a, std::size_t k);
MapSpace qc_k(const HomAlgebra& a, std::size_t k);
MapSpace zder_k(const HomAlgebra& a, std::size_t k);

MapSpace solve_space(const HomAlgebra& a, SpaceKind kind, std::size_t k);

struct Aggregate {
  SpaceKind kind;
  std::size_t max_power = 0;
  std::vector<MapSpace> per_k;  // k = 0..max_power
  Subspace total;
  bool direct = false;  // dim(total) == sum of per-k dims
};

Aggregate aggregate(const HomAlgebra& a, SpaceKind kind, std::size_t max_power);

Matrix nu(const Matrix& d1, const Matrix& d2);        // d1 d2 + d2 d1
Matrix nu_prime(const Matrix& d1, const Matrix& d2);  // d1 d2 - d2 d1
Matrix sigma_op(const HomAlgebra& a, const Matrix& d);  // alpha o d

// Exact residuals of the defining identity of `kind` at power k on one basis
// pair; all-zero over all pairs iff op belongs to the space (given the
// commuting constraint). Used by soundness tests and counterexample replay.
bool satisfies_identity(const HomAlgebra& a, SpaceKind kind, std::size_t k,
                        const Matrix& op);

}  // namespace hja
