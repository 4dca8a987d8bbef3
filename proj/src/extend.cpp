#include "hja/extend.hpp"

namespace hja {

namespace {

Verdict gated(std::string claim_id, std::size_t max_power, bool pre,
              std::string gate_note) {
  Verdict v;
  v.claim_id = std::move(claim_id);
  v.max_power = max_power;
  v.preconditions_met = pre;
  if (!pre) v.note = std::move(gate_note);
  return v;
}

void fail(Verdict& v, Counterexample ce) {
  if (v.holds) {
    v.holds = false;
    v.counterexample = std::move(ce);
  }
}

}  // namespace

ExtendedAlgebra extend_algebra(const HomAlgebra& a) {
  std::size_t n = a.dim();
  std::size_t n2 = 2 * n;
  std::vector<Scalar> mu(n2 * n2 * n2, Scalar(0));
  // only degree 1 x degree 1 products survive, landing in the t^2 layer
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        mu[(i * n2 + j) * n2 + (n + m)] = a.c(i, j, m);
  Matrix alpha2(n2, n2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      alpha2.at(i, j) = a.alpha().at(i, j);
      alpha2.at(n + i, n + j) = a.alpha().at(i, j);
    }
  HomAlgebra carrier(n2, std::move(mu), std::move(alpha2),
                     a.name().empty() ? "extended" : a.name() + "-extended");

  Subspace prod = a.product_full();
  Subspace u = complement(prod);
  Matrix p(n, n);
  if (n > 0) {
    std::size_t r = prod.dim();
    Matrix change(n, n);  // columns: product basis, then complement basis
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t i = 0; i < n; ++i)
        change.at(i, c) = prod.basis_vector(c)[i];
    for (std::size_t c = 0; c < u.dim(); ++c)
      for (std::size_t i = 0; i < n; ++i)
        change.at(i, r + c) = u.basis_vector(c)[i];
    Matrix keep(n, n);  // keep the product coordinates, drop the rest
    for (std::size_t c = 0; c < r; ++c) keep.at(c, c) = 1;
    p = change * keep * inverse(change);
  }
  return ExtendedAlgebra{a, std::move(carrier), std::move(prod), std::move(u),
                         std::move(p)};
}

Matrix phi(const ExtendedAlgebra& ext, const Matrix& d, const Matrix& dprime) {
  std::size_t n = ext.base.dim();
  if (d.rows() != n || dprime.rows() != n)
    throw std::invalid_argument("phi: witness size mismatch");
  Matrix lower = dprime * ext.proj_product;
  Matrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.at(i, j) = d.at(i, j);
      out.at(n + i, n + j) = lower.at(i, j);
    }
  return out;
}

Verdict verify_extension_validity(const HomAlgebra& a) {
  bool pre = a.check_hom_jordan().ok;
  Verdict v = gated("extension.carrier-is-hom-jordan", 0, pre,
                    "base fails the defining identity");
  if (!pre) return v;
  ExtendedAlgebra ext = extend_algebra(a);
  if (!ext.carrier.check_hom_jordan().ok)
    fail(v, {0, 0, {}, "carrier fails the defining identity"});
  if (a.check_multiplicative() && !ext.carrier.check_multiplicative())
    fail(v, {0, 0, {}, "carrier of a multiplicative base is not "
                       "multiplicative"});
  return v;
}

Verdict verify_embedding_derivations(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  Verdict v = gated("extension.phi-into-carrier-derivations", max_power, pre,
                    "algebra is not multiplicative");
  if (!pre) return v;
  ExtendedAlgebra ext = extend_algebra(a);
  std::size_t n = a.dim();
  for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
    auto [q, w] = qder_k(a, k);
    std::vector<Vector> images;
    for (std::size_t i = 0; i < w.pair_space.dim(); ++i) {
      Vector pair = w.pair_space.basis_vector(i);
      Matrix d = Matrix::unflatten(Vector(pair.begin(), pair.begin() + n * n), n);
      Matrix dp = Matrix::unflatten(
          Vector(pair.begin() + n * n, pair.end()), n);
      Matrix image = phi(ext, d, dp);
      if (!satisfies_identity(ext.carrier, SpaceKind::Der, k, image)) {
        fail(v, {k, 0, {d, dp}, "phi image is not a carrier derivation"});
        break;
      }
      // companion independence: witnesses with zero leading block map to zero
      if (d.is_zero() && !image.is_zero()) {
        fail(v, {k, 0, {d, dp}, "phi image depends on the companion"});
        break;
      }
      images.push_back(image.flatten());
    }
    if (v.holds &&
        Subspace::span(images, 4 * n * n).dim() != q.dim())
      fail(v, {k, 0, {}, "phi image rank differs from the published space"});
  }
  return v;
}

Verdict verify_carrier_decomposition(const HomAlgebra& a, std::size_t max_power) {
  bool inv = is_invertible(a.alpha());
  bool z0 = a.centralizer().dim() == 0;
  Verdict v = gated("extension.carrier-derivation-decomposition", max_power,
                    inv && z0,
                    inv ? "centralizer is nonzero"
                        : "twist map is not invertible");
  if (!v.preconditions_met) return v;
  ExtendedAlgebra ext = extend_algebra(a);
  std::size_t n = a.dim();

  // the carrier's centralizer is exactly the t^2 layer
  std::vector<Vector> t2;
  for (std::size_t i = 0; i < n; ++i)
    t2.push_back(ext.carrier.basis_vector(n + i));
  if (!(ext.carrier.centralizer() == Subspace::span(t2, 2 * n)))
    fail(v, {0, 0, {}, "carrier centralizer differs from the t^2 layer"});

  // phi image of the aggregated quasiderivations
  std::vector<Vector> images;
  for (std::size_t k = 0; k <= max_power; ++k) {
    auto [q, w] = qder_k(a, k);
    for (std::size_t i = 0; i < w.pair_space.dim(); ++i) {
      Vector pair = w.pair_space.basis_vector(i);
      Matrix d = Matrix::unflatten(Vector(pair.begin(), pair.begin() + n * n), n);
      Matrix dp = Matrix::unflatten(
          Vector(pair.begin() + n * n, pair.end()), n);
      images.push_back(phi(ext, d, dp).flatten());
    }
  }
  Subspace phi_span = Subspace::span(images, 4 * n * n);
  Subspace der_total = aggregate(ext.carrier, SpaceKind::Der, max_power).total;
  Subspace zder_total =
      aggregate(ext.carrier, SpaceKind::ZDer, max_power).total;
  if (!(der_total == subspace_sum(phi_span, zder_total)))
    fail(v, {0, 0, {}, "carrier derivations differ from phi image plus "
                       "central derivations"});
  if (!is_direct(phi_span, zder_total))
    fail(v, {0, 0, {}, "phi image meets the central derivations"});
  return v;
}

std::vector<Verdict> extension_suite(const HomAlgebra& a,
                                    std::size_t max_power) {
  return {verify_extension_validity(a), verify_embedding_derivations(a, max_power),
          verify_carrier_decomposition(a, max_power)};
}

}  // namespace hja
