#include "hja/centroid.hpp"

#include <random>
#include <stdexcept>

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

// Projection onto s along t, for s (+) t = whole space.
Matrix projector(const Subspace& s, const Subspace& t) {
  std::size_t n = s.ambient_dim();
  if (s.dim() + t.dim() != n || !is_direct(s, t))
    throw std::invalid_argument("projector: not a direct decomposition");
  Matrix change(n, n);
  for (std::size_t c = 0; c < s.dim(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      change.at(i, c) = s.basis_vector(c)[i];
  for (std::size_t c = 0; c < t.dim(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      change.at(i, s.dim() + c) = t.basis_vector(c)[i];
  Matrix keep(n, n);
  for (std::size_t c = 0; c < s.dim(); ++c) keep.at(c, c) = 1;
  return n == 0 ? Matrix(0, 0) : change * keep * inverse(change);
}

std::vector<Matrix> basis_operators(const Subspace& s, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    out.push_back(Matrix::unflatten(s.basis_vector(i), n));
  return out;
}

}  // namespace

CentroidTable centroid_composition_table(const HomAlgebra& a,
                                         std::size_t max_power) {
  CentroidTable out;
  out.max_power = max_power;
  out.total = aggregate(a, SpaceKind::C, max_power).total;
  std::size_t n = a.dim();
  std::vector<Matrix> gens = basis_operators(out.total, n);
  out.table.resize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.table[i].resize(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      out.table[i][j] = out.total.coordinates((gens[i] * gens[j]).flatten());
      if (!out.table[i][j]) out.closed = false;
    }
  }
  return out;
}

CentroidElement idempotent_from_decomposition(const HomAlgebra& a,
                                              const Subspace& v1,
                                              const Subspace& v2) {
  if (!a.is_hom_ideal(v1) || !a.is_hom_ideal(v2))
    throw std::invalid_argument("idempotent: inputs are not ideals");
  if (v1.dim() + v2.dim() != a.dim() || !is_direct(v1, v2))
    throw std::invalid_argument("idempotent: not a direct decomposition");
  Matrix e1 = projector(v1, v2);
  if (!(e1 * e1 == e1) ||
      !satisfies_identity(a, SpaceKind::C, 0, e1))
    throw std::logic_error("idempotent: projection is not a centroid "
                           "idempotent");
  return CentroidElement{std::move(e1), 0};
}

std::pair<Subspace, Subspace> decomposition_from_idempotent(
    const HomAlgebra& a, const CentroidElement& psi) {
  if (!(psi.matrix * psi.matrix == psi.matrix))
    throw std::invalid_argument("decomposition: operator is not idempotent");
  if (!satisfies_identity(a, SpaceKind::C, psi.k, psi.matrix))
    throw std::invalid_argument("decomposition: operator is not in the "
                                "centroid");
  if (!is_invertible(a.alpha()))
    throw std::invalid_argument("decomposition: twist map is not invertible");
  Subspace ker = nullspace(psi.matrix);
  Subspace im = map_subspace(psi.matrix, Subspace::full(a.dim()));
  if (!a.is_hom_ideal(ker) || !a.is_hom_ideal(im) || !is_direct(ker, im) ||
      ker.dim() + im.dim() != a.dim())
    throw std::logic_error("decomposition: kernel/image do not split the "
                           "algebra into ideals");
  return {std::move(ker), std::move(im)};
}

Verdict verify_form_symmetry(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.is_perfect();
  Verdict v = gated("centroid.centroid-symmetric-for-invariant-forms",
                    max_power, pre, "algebra is not perfect");
  if (!pre) return v;
  std::size_t n = a.dim();
  std::vector<BilinearForm> forms = invariant_forms(a);
  for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
    Matrix ak = a.alpha().power(k);
    MapSpace ck = c_k(a, k);
    for (std::size_t g = 0; g < ck.dim() && v.holds; ++g) {
      Matrix psi = ck.basis_operator(g, n);
      for (const BilinearForm& f : forms) {
        // f(psi(mu(ea, eb)), alpha^k ec) = f(alpha^k mu(ea, eb), psi(ec))
        Matrix lhs = psi.transpose() * f.gram * ak;
        Matrix rhs = ak.transpose() * f.gram * psi;
        bool ok = true;
        for (std::size_t ia = 0; ia < n && ok; ++ia)
          for (std::size_t ib = 0; ib < n && ok; ++ib) {
            Vector p = a.basis_product(ia, ib);
            Vector dl = lhs.transpose().apply(p);
            Vector dr = rhs.transpose().apply(p);
            for (std::size_t c = 0; c < n; ++c)
              if (dl[c] != dr[c]) { ok = false; break; }
          }
        if (!ok) {
          fail(v, {k, 0, {psi, f.gram}, "centroid element is not twisted-"
                                        "symmetric for an invariant form"});
          break;
        }
      }
    }
  }
  return v;
}

Subspace z_of_subset(const HomAlgebra& a, const Subspace& i) {
  std::size_t n = a.dim();
  std::size_t r = i.dim();
  Matrix sys(r * n, n);
  for (std::size_t b = 0; b < r; ++b) {
    Vector y = i.basis_vector(b);
    for (std::size_t p = 0; p < n; ++p) {
      Vector prod = a.multiply(a.basis_vector(p), y);
      for (std::size_t m = 0; m < n; ++m) sys.at(b * n + m, p) = prod[m];
    }
  }
  return nullspace(sys);
}

Verdict verify_annihilator_invariance(const HomAlgebra& a, const Subspace& i,
                      std::size_t max_power) {
  bool pre = map_subspace(a.alpha(), i) == i;  // alpha-stable, invertibly
  Verdict v = gated("centroid.annihilator-centroid-invariant", max_power, pre,
                    "twist does not restrict invertibly to the subset");
  if (!pre) return v;
  std::size_t n = a.dim();
  Subspace z = z_of_subset(a, i);
  bool perfect_ideal =
      a.is_hom_ideal(i) && a.product_subspace(i, i) == i;
  for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
    MapSpace ck = c_k(a, k);
    for (std::size_t g = 0; g < ck.dim(); ++g) {
      Matrix psi = ck.basis_operator(g, n);
      if (!z.contains(map_subspace(psi, z))) {
        fail(v, {k, 0, {psi}, "centroid element moves the annihilator"});
        break;
      }
      if (perfect_ideal && !i.contains(map_subspace(psi, i))) {
        fail(v, {k, 0, {psi}, "centroid element moves a perfect ideal"});
        break;
      }
    }
  }
  if (v.holds && perfect_ideal) v.note = "perfect-ideal invariance included";
  return v;
}

Verdict verify_scalar_centroid_twist(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.flags().asserted_simple && a.check_multiplicative();
  std::string gate = "algebra is not flagged simple (or not multiplicative)";
  if (pre) {
    // simplicity evidence: the ideal closure of every basis vector and of
    // deterministic random vectors is the whole algebra
    std::size_t n = a.dim();
    std::mt19937_64 rng(20240825);
    std::vector<Vector> probes;
    for (std::size_t i = 0; i < n; ++i) probes.push_back(a.basis_vector(i));
    for (int t = 0; t < 50; ++t) {
      Vector x(n, Scalar(0));
      bool nonzero = false;
      for (std::size_t j = 0; j < n; ++j) {
        long e = static_cast<long>(rng() % 7) - 3;
        x[j] = Scalar(e);
        nonzero = nonzero || e != 0;
      }
      if (nonzero) probes.push_back(std::move(x));
    }
    for (const Vector& x : probes)
      if (!(a.ideal_closure(Subspace::span({x}, n)) == Subspace::full(n))) {
        pre = false;
        gate = "simplicity evidence failed: a nonzero vector generates a "
               "proper ideal";
        break;
      }
  }
  Verdict v = gated("centroid.scalar-centroid-forces-identity-twist", max_power,
                    pre, gate);
  if (!pre) return v;
  Subspace total = aggregate(a, SpaceKind::C, max_power).total;
  Subspace scalars =
      Subspace::span({Matrix::identity(a.dim()).flatten()}, a.dim() * a.dim());
  if (!(total == scalars)) {
    v.preconditions_met = false;
    v.note = "centroid is larger than the scalars within the bound";
    return v;
  }
  if (!(a.alpha() == Matrix::identity(a.dim())))
    fail(v, {0, 0, {a.alpha()}, "scalar centroid but twist is not the "
                                "identity"});
  return v;
}

InducedMap induced_map(const QuotientMap& q, const Matrix& f) {
  if (!q.ideal.contains(map_subspace(f, q.ideal)))
    throw std::invalid_argument("induced map: operator does not preserve the "
                                "ideal");
  Matrix fbar = q.pi * f * q.section;
  if (!(q.pi * f == fbar * q.pi))
    throw std::logic_error("induced map: descent identity failed");
  if (f * q.source.alpha() == q.source.alpha() * f &&
      !(fbar * q.target.alpha() == q.target.alpha() * fbar))
    throw std::logic_error("induced map: twist commutation did not descend");
  return InducedMap{f, std::move(fbar)};
}

Subspace ideal_preserving(const HomAlgebra& a, const Subspace& ideal,
                          const Subspace& ops) {
  std::size_t n = a.dim();
  std::size_t r = ops.dim();
  Matrix away = Matrix::identity(n) - projector(ideal, complement(ideal));
  std::vector<Matrix> gens = basis_operators(ops, n);
  // unknowns: coefficients in the ops basis; constraints: the component of
  // f(b) off the ideal vanishes for every ideal basis vector b
  Matrix sys(ideal.dim() * n, r);
  for (std::size_t g = 0; g < r; ++g)
    for (std::size_t b = 0; b < ideal.dim(); ++b) {
      Vector off = away.apply(gens[g].apply(ideal.basis_vector(b)));
      for (std::size_t m = 0; m < n; ++m) sys.at(b * n + m, g) = off[m];
    }
  Subspace coeffs = nullspace(sys);
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    Vector c = coeffs.basis_vector(i);
    Matrix op(n, n);
    for (std::size_t g = 0; g < r; ++g)
      op = op + gens[g].scaled(c[g]);
    kept.push_back(op.flatten());
  }
  return Subspace::span(kept, n * n);
}

Subspace mult_span(const HomAlgebra& a) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i)
    rows.push_back(a.left_multiplication(a.basis_vector(i)).flatten());
  return Subspace::span(rows, a.dim() * a.dim());
}

std::vector<Verdict> verify_quotient_induced_maps(const QuotientMap& q,
                                  std::size_t max_power) {
  const HomAlgebra& v1 = q.source;
  const HomAlgebra& v2 = q.target;
  std::size_t n1 = v1.dim(), n2 = v2.dim();
  bool inv = is_invertible(v1.alpha());
  std::vector<Verdict> out;

  // ideal-preserving centroid per power
  std::vector<Subspace> ip;
  if (inv)
    for (std::size_t k = 0; k <= max_power; ++k)
      ip.push_back(ideal_preserving(v1, q.ideal, c_k(v1, k).space));

  Verdict vi = gated("quotient.i-homomorphism-laws", max_power, inv,
                     "source twist is not invertible");
  if (inv)
    for (std::size_t k = 0; k <= max_power && vi.holds; ++k)
      for (std::size_t s = 0; s <= max_power && vi.holds; ++s)
        for (std::size_t i = 0; i < ip[k].dim() && vi.holds; ++i)
          for (std::size_t j = 0; j < ip[s].dim(); ++j) {
            Matrix f = Matrix::unflatten(ip[k].basis_vector(i), n1);
            Matrix g = Matrix::unflatten(ip[s].basis_vector(j), n1);
            Matrix fg = induced_map(q, f * g).induced_op;
            Matrix sep = induced_map(q, f).induced_op *
                         induced_map(q, g).induced_op;
            Matrix sig = induced_map(q, v1.alpha() * f).induced_op;
            Matrix sig2 = v2.alpha() * induced_map(q, f).induced_op;
            if (!(fg == sep) || !(sig == sig2)) {
              fail(vi, {k, s, {f, g}, "induced map is not a homomorphism"});
              break;
            }
          }
  out.push_back(std::move(vi));

  Verdict vii = gated("quotient.ii-left-multiplications-descend", max_power, inv,
                      "source twist is not invertible");
  if (inv) {
    std::vector<Vector> images;
    for (std::size_t i = 0; i < n1 && vii.holds; ++i) {
      Matrix lx = v1.left_multiplication(v1.basis_vector(i));
      Matrix ind = induced_map(q, lx).induced_op;
      if (!(ind == v2.left_multiplication(q.pi.col(i))))
        fail(vii, {0, 0, {lx}, "induced left multiplication differs from the "
                               "left multiplication of the image"});
      images.push_back(ind.flatten());
    }
    if (vii.holds &&
        !(Subspace::span(images, n2 * n2) == mult_span(v2)))
      fail(vii, {0, 0, {}, "image of the multiplication span differs from "
                           "the target multiplication span"});
  }
  out.push_back(std::move(vii));

  Verdict viii = gated("quotient.iii-centroid-descends-to-centroid", max_power,
                       inv, "source twist is not invertible");
  if (inv)
    for (std::size_t k = 0; k <= max_power && viii.holds; ++k)
      for (std::size_t i = 0; i < ip[k].dim(); ++i) {
        Matrix f = Matrix::unflatten(ip[k].basis_vector(i), n1);
        Matrix ind = induced_map(q, f).induced_op;
        if (!satisfies_identity(v2, SpaceKind::C, k, ind)) {
          fail(viii, {k, 0, {f}, "induced operator leaves the target "
                                 "centroid"});
          break;
        }
      }
  out.push_back(std::move(viii));

  bool inj_pre = inv && v1.is_perfect() &&
                 v1.centralizer().contains(q.ideal);
  Verdict viv = gated("quotient.iv-injective-on-centroid", max_power, inj_pre,
                      "needs perfect source with kernel inside the "
                      "centralizer");
  if (inj_pre) {
    Subspace ip_total(n1 * n1);
    for (const Subspace& s : ip) ip_total = subspace_sum(ip_total, s);
    std::vector<Vector> images;
    for (std::size_t i = 0; i < ip_total.dim(); ++i)
      images.push_back(
          induced_map(q, Matrix::unflatten(ip_total.basis_vector(i), n1))
              .induced_op.flatten());
    if (Subspace::span(images, n2 * n2).dim() != ip_total.dim())
      fail(viv, {0, 0, {}, "a nonzero ideal-preserving centroid element "
                           "induces the zero operator"});
  }
  out.push_back(std::move(viv));

  bool kernel_is_z = inv && q.ideal == v1.centralizer();
  bool tot_pre = kernel_is_z || (inj_pre && v2.centralizer().dim() == 0);
  Verdict vv = gated("quotient.v-centroid-preserves-kernel", max_power, tot_pre,
                     "needs kernel equal to the centralizer, or the "
                     "injectivity gates plus trivial target centralizer");
  if (tot_pre) {
    for (std::size_t k = 0; k <= max_power && vv.holds; ++k) {
      MapSpace ck = c_k(v1, k);
      for (std::size_t i = 0; i < ck.dim(); ++i) {
        Matrix f = ck.basis_operator(i, n1);
        if (!q.ideal.contains(map_subspace(f, q.ideal))) {
          fail(vv, {k, 0, {f}, "centroid element moves the kernel of the "
                               "projection"});
          break;
        }
      }
    }
    if (vv.holds && kernel_is_z)
      vv.note = "kernel equals the centralizer: invariance statement fully "
                "instantiated";
  }
  out.push_back(std::move(vv));
  return out;
}

std::vector<Verdict> centroid_suite(const HomAlgebra& a,
                                    std::size_t max_power) {
  std::vector<Verdict> out;
  out.push_back(verify_scalar_centroid_twist(a, max_power));
  out.push_back(verify_form_symmetry(a, max_power));
  std::size_t instance = 0;
  for (const Subspace& i : {Subspace(a.dim()), Subspace::full(a.dim()),
                            a.product_full(), a.centralizer()}) {
    Verdict v = verify_annihilator_invariance(a, i, max_power);
    v.claim_id += ".instance-" + std::to_string(instance++);
    out.push_back(std::move(v));
  }
  auto add_quotient = [&](const Subspace& ideal, const char* tag) {
    for (Verdict v : verify_quotient_induced_maps(quotient(a, ideal), max_power)) {
      v.claim_id += std::string(".") + tag;
      out.push_back(std::move(v));
    }
  };
  add_quotient(Subspace(a.dim()), "zero-ideal");
  Subspace z = a.centralizer();
  if (z.dim() > 0 && z.dim() < a.dim() && a.is_hom_ideal(z))
    add_quotient(z, "centralizer-ideal");
  return out;
}

}  // namespace hja
