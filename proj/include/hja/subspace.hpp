#pragma once

#include <optional>
#include <vector>

#include "hja/matrix.hpp"

namespace hja {

// Linear subspace of Q^n in canonical form: the basis is the RREF of any
// spanning set with zero rows dropped, so structural equality coincides with
// subspace equality.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
  }

  // Coordinates of v in the canonical basis; empty when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
  friend Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);

 private:
  std::size_t ambient_;
  Matrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

Subspace nullspace(const Matrix& m);
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
Subspace subspace_intersect(const Subspace& s1, const Subspace& s2);
bool is_direct(const Subspace& s1, const Subspace& s2);

// Deterministic complement: the span of the standard basis vectors at the
// non-pivot coordinates of s, lowest index first.
Subspace complement(const Subspace& s);

// Image of a subspace under a linear map (columns = ambient of s).
Subspace map_subspace(const Matrix& m, const Subspace& s);

}  // namespace hja
