#include "hja/theorems.hpp"

#include <functional>

namespace hja {

namespace {

using Spaces = std::vector<MapSpace>;

Spaces spaces_upto(const HomAlgebra& a, SpaceKind kind, std::size_t max_power) {
  Spaces out;
  for (std::size_t k = 0; k <= max_power; ++k)
    out.push_back(solve_space(a, kind, k));
  return out;
}

// First generator pair (d1, d2) with d1 in lhs_k, d2 in rhs_s and
// prod(d1, d2) outside target_{k+s}, over all k + s <= bound.
std::optional<Counterexample> bracket_closure(
    std::size_t n, const Spaces& lhs, const Spaces& rhs, const Spaces& target,
    std::size_t bound,
    const std::function<Matrix(const Matrix&, const Matrix&)>& prod,
    const std::string& what) {
  for (std::size_t k = 0; k <= bound; ++k)
    for (std::size_t s = 0; k + s <= bound; ++s)
      for (std::size_t i = 0; i < lhs[k].dim(); ++i)
        for (std::size_t j = 0; j < rhs[s].dim(); ++j) {
          Matrix d1 = lhs[k].basis_operator(i, n);
          Matrix d2 = rhs[s].basis_operator(j, n);
          if (!target[k + s].contains_operator(prod(d1, d2)))
            return Counterexample{k, s, {d1, d2}, what};
        }
  return std::nullopt;
}

// First generator d in sp_k with alpha o d outside target_{k+1}, k < bound.
std::optional<Counterexample> sigma_closure(const HomAlgebra& a,
                                            const Spaces& sp,
                                            const Spaces& target,
                                            std::size_t bound,
                                            const std::string& what) {
  for (std::size_t k = 0; k < bound; ++k)
    for (std::size_t i = 0; i < sp[k].dim(); ++i) {
      Matrix d = sp[k].basis_operator(i, a.dim());
      if (!target[k + 1].contains_operator(sigma_op(a, d)))
        return Counterexample{k, 0, {d}, what};
    }
  return std::nullopt;
}

Verdict gated(std::string claim_id, std::size_t max_power, bool pre,
              std::string gate_note = "") {
  Verdict v;
  v.claim_id = std::move(claim_id);
  v.max_power = max_power;
  v.preconditions_met = pre;
  if (!pre) v.note = gate_note.empty() ? "preconditions not met" : gate_note;
  return v;
}

void apply_failure(Verdict& v, std::optional<Counterexample> ce) {
  if (v.holds && ce) {
    v.holds = false;
    v.counterexample = std::move(ce);
  }
}

Matrix embed_block(const Matrix& d, std::size_t n, std::size_t off) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) m.at(off + i, off + j) = d.at(i, j);
  return m;
}

Vector embed_vector(const Vector& x, std::size_t n, std::size_t off) {
  Vector v(n, Scalar(0));
  for (std::size_t i = 0; i < x.size(); ++i) v[off + i] = x[i];
  return v;
}

// First basis vector of one side missing from the other, as a counterexample
// for a failed subspace equality.
std::optional<Counterexample> equality_gap(const Subspace& lhs,
                                           const Subspace& rhs, std::size_t k,
                                           std::size_t n,
                                           const std::string& what) {
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    if (!rhs.contains(lhs.basis_vector(i)))
      return Counterexample{k, 0, {Matrix::unflatten(lhs.basis_vector(i), n)},
                            what + ": left generator outside right side"};
  for (std::size_t i = 0; i < rhs.dim(); ++i)
    if (!lhs.contains(rhs.basis_vector(i)))
      return Counterexample{k, 0, {Matrix::unflatten(rhs.basis_vector(i), n)},
                            what + ": right generator outside left side"};
  return std::nullopt;
}

}  // namespace

std::vector<Verdict> verify_family_closure(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  std::size_t n = a.dim();
  std::vector<Verdict> out;
  for (SpaceKind kind : {SpaceKind::GDer, SpaceKind::QDer, SpaceKind::C}) {
    Verdict v = gated(std::string("closure.") + kind_name(kind) + "-subalgebra",
                      max_power, pre, "algebra is not multiplicative");
    if (pre) {
      Spaces sp = spaces_upto(a, kind, max_power);
      apply_failure(v, sigma_closure(a, sp, sp, max_power,
                                     "sigma image leaves the family"));
      apply_failure(v, bracket_closure(n, sp, sp, sp, max_power, nu_prime,
                                       "bracket leaves the family"));
    }
    out.push_back(std::move(v));
  }
  Verdict v = gated("closure.zder-ideal-in-der", max_power, pre,
                    "algebra is not multiplicative");
  if (pre) {
    Spaces z = spaces_upto(a, SpaceKind::ZDer, max_power);
    Spaces d = spaces_upto(a, SpaceKind::Der, max_power);
    apply_failure(v, sigma_closure(a, z, z, max_power,
                                   "sigma image leaves central derivations"));
    apply_failure(v, bracket_closure(n, z, d, z, max_power, nu_prime,
                                     "bracket with a derivation leaves "
                                     "central derivations"));
  }
  out.push_back(std::move(v));
  return out;
}

std::vector<Verdict> verify_mixed_inclusions(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  std::size_t n = a.dim();
  Spaces der, gder, qder, c, qc;
  if (pre) {
    der = spaces_upto(a, SpaceKind::Der, max_power);
    gder = spaces_upto(a, SpaceKind::GDer, max_power);
    qder = spaces_upto(a, SpaceKind::QDer, max_power);
    c = spaces_upto(a, SpaceKind::C, max_power);
    qc = spaces_upto(a, SpaceKind::QC, max_power);
  }
  std::vector<Verdict> out;
  auto make = [&](const char* id) {
    return gated(id, max_power, pre, "algebra is not multiplicative");
  };

  Verdict v1 = make("inclusions.1-bracket-der-c-in-c");
  if (pre)
    apply_failure(v1, bracket_closure(n, der, c, c, max_power, nu_prime,
                                      "bracket of derivation and centroid "
                                      "element leaves the centroid"));
  out.push_back(std::move(v1));

  Verdict v2 = make("inclusions.2-bracket-qder-qc-in-qc");
  if (pre)
    apply_failure(v2, bracket_closure(n, qder, qc, qc, max_power, nu_prime,
                                      "bracket leaves the quasicentroid"));
  out.push_back(std::move(v2));

  Verdict v3 = make("inclusions.3-bracket-qc-qc-in-qder");
  if (pre)
    apply_failure(v3, bracket_closure(n, qc, qc, qder, max_power, nu_prime,
                                      "quasicentroid bracket is not a "
                                      "quasiderivation"));
  out.push_back(std::move(v3));

  Verdict v4 = make("inclusions.4-c-in-qder");
  if (pre)
    for (std::size_t k = 0; k <= max_power && v4.holds; ++k)
      for (std::size_t i = 0; i < c[k].dim(); ++i)
        if (!qder[k].space.contains(c[k].space.basis_vector(i))) {
          apply_failure(v4, Counterexample{k, 0, {c[k].basis_operator(i, n)},
                                           "centroid element is not a "
                                           "quasiderivation"});
          break;
        }
  out.push_back(std::move(v4));

  Verdict v5 = make("inclusions.5-qder-plus-qc-in-gder");
  if (pre)
    for (std::size_t k = 0; k <= max_power && v5.holds; ++k) {
      Subspace sum = subspace_sum(qder[k].space, qc[k].space);
      if (!gder[k].space.contains(sum))
        apply_failure(v5, equality_gap(sum, gder[k].space, k, n,
                                       "sum escapes generalized derivations"));
    }
  out.push_back(std::move(v5));

  Verdict v6 = make("inclusions.6-c-compose-der-in-der");
  if (pre)
    apply_failure(v6, bracket_closure(
                          n, c, der, der, max_power,
                          [](const Matrix& x, const Matrix& y) { return x * y; },
                          "composition leaves the derivations"));
  out.push_back(std::move(v6));
  return out;
}

Verdict verify_gder_split(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  Verdict v = gated("split.gder-eq-qder-plus-qc", max_power, pre,
                    "algebra is not multiplicative");
  if (!pre) return v;
  std::size_t n = a.dim();
  Scalar half = make_scalar(1, 2);
  for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
    auto [g, gw] = gder_k(a, k);
    MapSpace q = qder_k(a, k).first;
    MapSpace qc = qc_k(a, k);
    Subspace sum = subspace_sum(q.space, qc.space);
    if (!(g.space == sum)) {
      apply_failure(v, equality_gap(g.space, sum, k, n,
                                    "generalized derivations vs sum"));
      break;
    }
    // the proof's split of a witness (D, D') into (D+D')/2 + (D-D')/2
    for (std::size_t i = 0; i < gw.triple_space.dim(); ++i) {
      Vector w = gw.triple_space.basis_vector(i);
      Matrix d = Matrix::unflatten(Vector(w.begin(), w.begin() + n * n), n);
      Matrix dp = Matrix::unflatten(
          Vector(w.begin() + n * n, w.begin() + 2 * n * n), n);
      Matrix sym = (d + dp).scaled(half);
      Matrix skew = (d - dp).scaled(half);
      if (!q.contains_operator(sym)) {
        apply_failure(v, Counterexample{k, 0, {sym},
                                        "symmetric half is not a "
                                        "quasiderivation"});
        break;
      }
      if (!qc.contains_operator(skew)) {
        apply_failure(v, Counterexample{k, 0, {skew},
                                        "antisymmetric half is not in the "
                                        "quasicentroid"});
        break;
      }
    }
  }
  return v;
}

std::vector<Verdict> verify_direct_sum_decomposition(const HomAlgebra& a1, const HomAlgebra& a2,
                                   std::size_t max_power) {
  HomAlgebra s = direct_sum(a1, a2);
  std::size_t n1 = a1.dim(), n2 = a2.dim(), n = n1 + n2;
  bool inv = is_invertible(s.alpha());
  std::vector<Verdict> out;

  Verdict vz = gated("direct-sum.z-decomposition", max_power, inv,
                     "twist map is not invertible");
  if (inv) {
    std::vector<Vector> embedded;
    Subspace z1 = a1.centralizer(), z2 = a2.centralizer();
    for (std::size_t i = 0; i < z1.dim(); ++i)
      embedded.push_back(embed_vector(z1.basis_vector(i), n, 0));
    for (std::size_t i = 0; i < z2.dim(); ++i)
      embedded.push_back(embed_vector(z2.basis_vector(i), n, n1));
    Subspace expected = Subspace::span(embedded, n);
    if (!(s.centralizer() == expected))
      apply_failure(vz, equality_gap(s.centralizer(), expected, 0, 0,
                                     "centralizer of the sum vs block "
                                     "embedding of the centralizers"));
  }
  out.push_back(std::move(vz));

  bool z_trivial = inv && s.centralizer().dim() == 0;
  for (SpaceKind kind : {SpaceKind::Der, SpaceKind::GDer, SpaceKind::QDer,
                         SpaceKind::C}) {
    Verdict v = gated(std::string("direct-sum.") + kind_name(kind) +
                          "-decomposition",
                      max_power, z_trivial,
                      inv ? "centralizer of the sum is nonzero"
                          : "twist map is not invertible");
    if (z_trivial)
      for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
        Subspace big = solve_space(s, kind, k).space;
        std::vector<Vector> embedded;
        MapSpace m1 = solve_space(a1, kind, k);
        MapSpace m2 = solve_space(a2, kind, k);
        for (std::size_t i = 0; i < m1.dim(); ++i)
          embedded.push_back(
              embed_block(m1.basis_operator(i, n1), n, 0).flatten());
        for (std::size_t i = 0; i < m2.dim(); ++i)
          embedded.push_back(
              embed_block(m2.basis_operator(i, n2), n, n1).flatten());
        Subspace expected = Subspace::span(embedded, n * n);
        if (!(big == expected))
          apply_failure(v, equality_gap(big, expected, k, n,
                                        "space of the sum vs block embedding "
                                        "of the summand spaces"));
      }
    out.push_back(std::move(v));
  }
  return out;
}

Verdict verify_central_brackets(const HomAlgebra& a, std::size_t max_power) {
  bool inv = is_invertible(a.alpha());
  Verdict v = gated("central-bracket.bracket-c-qc-into-centralizer", max_power, inv,
                    "twist map is not invertible");
  if (!inv) return v;
  std::size_t n = a.dim();
  Subspace z = a.centralizer();
  Spaces c = spaces_upto(a, SpaceKind::C, max_power);
  Spaces qc = spaces_upto(a, SpaceKind::QC, max_power);
  for (std::size_t k = 0; k <= max_power && v.holds; ++k)
    for (std::size_t s = 0; k + s <= max_power && v.holds; ++s)
      for (std::size_t i = 0; i < c[k].dim() && v.holds; ++i)
        for (std::size_t j = 0; j < qc[s].dim(); ++j) {
          Matrix d1 = c[k].basis_operator(i, n);
          Matrix d2 = qc[s].basis_operator(j, n);
          Matrix b = nu_prime(d1, d2);
          bool into_z = true;
          for (std::size_t col = 0; col < n; ++col)
            into_z = into_z && z.contains(b.col(col));
          if (!into_z || (z.dim() == 0 && !b.is_zero())) {
            apply_failure(v, Counterexample{k, s, {d1, d2},
                                            "bracket image escapes the "
                                            "centralizer"});
            break;
          }
        }
  if (v.holds && z.dim() == 0) v.note = "trivial centralizer: brackets vanish";
  return v;
}

Verdict verify_zder_intersection(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  Verdict v = gated("intersection.zder-eq-c-intersect-der", max_power, pre,
                    "algebra is not multiplicative");
  if (!pre) return v;
  for (std::size_t k = 0; k <= max_power && v.holds; ++k) {
    Subspace lhs = zder_k(a, k).space;
    Subspace rhs = subspace_intersect(c_k(a, k).space, der_k(a, k).space);
    if (!(lhs == rhs))
      apply_failure(v, equality_gap(lhs, rhs, k, a.dim(),
                                    "central derivations vs centroid meet "
                                    "derivations"));
  }
  return v;
}

Verdict verify_qc_jordan(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  Verdict v = gated("qc-jordan.qc-hom-jordan-under-nu", max_power, pre,
                    "algebra is not multiplicative");
  if (!pre) return v;
  std::size_t n = a.dim();
  Spaces qc = spaces_upto(a, SpaceKind::QC, max_power);
  apply_failure(v, bracket_closure(n, qc, qc, qc, max_power, nu,
                                   "anticommutator leaves the quasicentroid"));
  apply_failure(v, sigma_closure(a, qc, qc, max_power,
                                 "sigma image leaves the quasicentroid"));
  if (!v.holds) return v;

  // induced algebra on the aggregated space, when the aggregate is closed
  // within the bound
  Aggregate agg = aggregate(a, SpaceKind::QC, max_power);
  std::size_t m = agg.total.dim();
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(Matrix::unflatten(agg.total.basis_vector(i), n));
  std::vector<Scalar> mu(m * m * m, Scalar(0));
  Matrix sig(m, m);
  bool closed = true;
  for (std::size_t i = 0; i < m && closed; ++i) {
    auto sc = agg.total.coordinates(sigma_op(a, gens[i]).flatten());
    if (!sc) { closed = false; break; }
    for (std::size_t t = 0; t < m; ++t) sig.at(t, i) = (*sc)[t];
    for (std::size_t j = 0; j < m && closed; ++j) {
      auto pc = agg.total.coordinates(nu(gens[i], gens[j]).flatten());
      if (!pc) { closed = false; break; }
      for (std::size_t t = 0; t < m; ++t) mu[(i * m + j) * m + t] = (*pc)[t];
    }
  }
  if (!closed) {
    v.note = "aggregate not closed within the power bound; induced-algebra "
             "check skipped";
    return v;
  }
  HomAlgebra induced(m, std::move(mu), sig, "induced-qc");
  CheckReport rep = induced.check_hom_jordan();
  if (!rep.ok)
    apply_failure(v, Counterexample{0, 0, {}, "induced algebra on the "
                                             "aggregated space fails the "
                                             "defining identity"});
  return v;
}

std::vector<Verdict> verify_qc_lie_equivalences(const HomAlgebra& a, std::size_t max_power) {
  bool pre = a.check_multiplicative();
  std::size_t n = a.dim();
  bool closure_bracket = true, closure_compose = true, bracket_zero = true;
  if (pre) {
    Spaces qc = spaces_upto(a, SpaceKind::QC, max_power);
    closure_bracket = !bracket_closure(n, qc, qc, qc, max_power, nu_prime, "");
    closure_compose = !bracket_closure(
        n, qc, qc, qc, max_power,
        [](const Matrix& x, const Matrix& y) { return x * y; }, "");
    for (std::size_t k = 0; k <= max_power && bracket_zero; ++k)
      for (std::size_t s = 0; k + s <= max_power && bracket_zero; ++s)
        for (std::size_t i = 0; i < qc[k].dim() && bracket_zero; ++i)
          for (std::size_t j = 0; j < qc[s].dim(); ++j)
            if (!nu_prime(qc[k].basis_operator(i, n),
                          qc[s].basis_operator(j, n))
                     .is_zero()) {
              bracket_zero = false;
              break;
            }
  }
  std::vector<Verdict> out;
  Verdict v1 = gated("qc-lie.1-bracket-closure-iff-composition-closure",
                     max_power, pre, "algebra is not multiplicative");
  if (pre) {
    v1.holds = closure_bracket == closure_compose;
    v1.note = std::string("bracket closure ") +
              (closure_bracket ? "holds" : "fails") + ", composition closure " +
              (closure_compose ? "holds" : "fails");
    if (!v1.holds)
      v1.counterexample = Counterexample{0, 0, {}, v1.note};
  }
  out.push_back(std::move(v1));

  bool pre2 = pre && is_invertible(a.alpha()) && a.centralizer().dim() == 0;
  Verdict v2 = gated("qc-lie.2-hom-lie-iff-bracket-vanishes", max_power, pre2,
                     pre ? "twist not invertible or centralizer nonzero"
                         : "algebra is not multiplicative");
  if (pre2) {
    v2.holds = closure_bracket == bracket_zero;
    v2.note = std::string("bracket closure ") +
              (closure_bracket ? "holds" : "fails") + ", bracket vanishing " +
              (bracket_zero ? "holds" : "fails");
    if (!v2.holds)
      v2.counterexample = Counterexample{0, 0, {}, v2.note};
  }
  out.push_back(std::move(v2));
  return out;
}

std::vector<Verdict> closure_suite(const HomAlgebra& a,
                                    std::size_t max_power) {
  std::vector<Verdict> out;
  auto add = [&](std::vector<Verdict> vs) {
    for (auto& v : vs) out.push_back(std::move(v));
  };
  add(verify_family_closure(a, max_power));
  add(verify_mixed_inclusions(a, max_power));
  out.push_back(verify_gder_split(a, max_power));
  out.push_back(verify_central_brackets(a, max_power));
  out.push_back(verify_zder_intersection(a, max_power));
  out.push_back(verify_qc_jordan(a, max_power));
  add(verify_qc_lie_equivalences(a, max_power));
  return out;
}

}  // namespace hja
