#include "hja/solve.hpp"

#include <stdexcept>

namespace hja {

const char* kind_name(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Commutant: return "commutant";
    case SpaceKind::Der: return "der";
    case SpaceKind::GDer: return "gder";
    case SpaceKind::QDer: return "qder";
    case SpaceKind::C: return "c";
    case SpaceKind::QC: return "qc";
    case SpaceKind::ZDer: return "zder";
  }
  return "?";
}

SpaceKind kind_from_name(const std::string& name) {
  if (name == "commutant") return SpaceKind::Commutant;
  if (name == "der") return SpaceKind::Der;
  if (name == "gder") return SpaceKind::GDer;
  if (name == "qder") return SpaceKind::QDer;
  if (name == "c") return SpaceKind::C;
  if (name == "qc") return SpaceKind::QC;
  if (name == "zder") return SpaceKind::ZDer;
  throw std::invalid_argument("unknown space kind '" + name + "'");
}

namespace {

// Incremental builder for homogeneous linear systems over flattened operator
// unknowns. Blocks of n^2 unknowns, one per operator.
class SystemBuilder {
 public:
  SystemBuilder(std::size_t n, std::size_t blocks)
      : n_(n), unknowns_(blocks * n * n) {}

  // coefficient on entry (p, q) of operator block b in the current equation
  void add(std::size_t b, std::size_t p, std::size_t q, const Scalar& coeff) {
    current_[b * n_ * n_ + p * n_ + q] += coeff;
  }
  void begin_equation() { current_.assign(unknowns_, Scalar(0)); }
  void end_equation() { rows_.push_back(current_); }

  // W alpha = alpha W for block b
  void add_commuting_constraints(std::size_t b, const Matrix& alpha) {
    for (std::size_t p = 0; p < n_; ++p)
      for (std::size_t q = 0; q < n_; ++q) {
        begin_equation();
        for (std::size_t r = 0; r < n_; ++r) {
          add(b, p, r, alpha.at(r, q));
          add(b, r, q, -alpha.at(p, r));
        }
        end_equation();
      }
  }

  // +s * mu(D e_i, z)_m as a linear form in block b (D applied on the left
  // slot): coefficient of D[p][i] is mu(e_p, z)_m.
  void add_left_product(const HomAlgebra& a, std::size_t b, std::size_t i,
                        const Vector& z, std::size_t m, int s) {
    for (std::size_t p = 0; p < n_; ++p) {
      Scalar coeff(0);
      for (std::size_t q = 0; q < n_; ++q)
        if (!is_zero(z[q])) coeff += z[q] * a.c(p, q, m);
      add(b, p, i, s > 0 ? coeff : Scalar(-coeff));
    }
  }

  // +s * D(w)_m in block b: coefficient of D[m][q] is w[q].
  void add_applied(std::size_t b, const Vector& w, std::size_t m, int s) {
    for (std::size_t q = 0; q < n_; ++q)
      add(b, m, q, s > 0 ? w[q] : Scalar(-w[q]));
  }

  Subspace solve() const {
    return nullspace(Matrix::from_rows(rows_, unknowns_));
  }

 private:
  std::size_t n_, unknowns_;
  Vector current_;
  std::vector<Vector> rows_;
};

Subspace project_block(const Subspace& s, std::size_t block, std::size_t n) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector full = s.basis_vector(i);
    rows.emplace_back(full.begin() + block * n * n,
                      full.begin() + (block + 1) * n * n);
  }
  return Subspace::span(rows, n * n);
}

}  // namespace

MapSpace commutant(const HomAlgebra& a) {
  return {SpaceKind::Commutant, 0, alpha_commutant(a.alpha())};
}

MapSpace der_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 1);
  sys.add_commuting_constraints(0, a.alpha());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();
        sys.add_applied(0, a.basis_product(i, j), m, +1);
        sys.add_left_product(a, 0, i, ak.col(j), m, -1);
        sys.add_left_product(a, 0, j, ak.col(i), m, -1);
        sys.end_equation();
      }
  return {SpaceKind::Der, k, sys.solve()};
}

std::pair<MapSpace, GDerWitness> gder_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 3);
  for (std::size_t b = 0; b < 3; ++b) sys.add_commuting_constraints(b, a.alpha());
  // D and D' enter asymmetrically, so all ordered pairs.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);   // mu(D e_i, a^k e_j)
        sys.add_left_product(a, 1, j, ak.col(i), m, +1);   // mu(a^k e_i, D' e_j)
        sys.add_applied(2, a.basis_product(i, j), m, -1);  // -D''(mu(e_i, e_j))
        sys.end_equation();
      }
  Subspace triples = sys.solve();
  return {{SpaceKind::GDer, k, project_block(triples, 0, n)}, {triples}};
}

std::pair<MapSpace, QDerWitness> qder_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 2);
  sys.add_commuting_constraints(0, a.alpha());
  sys.add_commuting_constraints(1, a.alpha());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);
        sys.add_left_product(a, 0, j, ak.col(i), m, +1);
        sys.add_applied(1, a.basis_product(i, j), m, -1);
        sys.end_equation();
      }
  Subspace pairs = sys.solve();
  return {{SpaceKind::QDer, k, project_block(pairs, 0, n)}, {pairs}};
}

MapSpace c_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 1);
  sys.add_commuting_constraints(0, a.alpha());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();  // mu(D e_i, a^k e_j) = mu(a^k e_i, D e_j)
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);
        sys.add_left_product(a, 0, j, ak.col(i), m, -1);
        sys.end_equation();
        sys.begin_equation();  // mu(D e_i, a^k e_j) = D(mu(e_i, e_j))
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);
        sys.add_applied(0, a.basis_product(i, j), m, -1);
        sys.end_equation();
      }
  return {SpaceKind::C, k, sys.solve()};
}

MapSpace qc_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 1);
  sys.add_commuting_constraints(0, a.alpha());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);
        sys.add_left_product(a, 0, j, ak.col(i), m, -1);
        sys.end_equation();
      }
  return {SpaceKind::QC, k, sys.solve()};
}

MapSpace zder_k(const HomAlgebra& a, std::size_t k) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  SystemBuilder sys(n, 1);
  sys.add_commuting_constraints(0, a.alpha());
  // the vanishing of mu(D e_i, a^k e_j) is not symmetric in (i, j)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        sys.begin_equation();  // mu(D e_i, a^k e_j) = 0
        sys.add_left_product(a, 0, i, ak.col(j), m, +1);
        sys.end_equation();
        sys.begin_equation();  // D(mu(e_i, e_j)) = 0
        sys.add_applied(0, a.basis_product(i, j), m, +1);
        sys.end_equation();
      }
  return {SpaceKind::ZDer, k, sys.solve()};
}

MapSpace solve_space(const HomAlgebra& a, SpaceKind kind, std::size_t k) {
  switch (kind) {
    case SpaceKind::Commutant: return commutant(a);
    case SpaceKind::Der: return der_k(a, k);
    case SpaceKind::GDer: return gder_k(a, k).first;
    case SpaceKind::QDer: return qder_k(a, k).first;
    case SpaceKind::C: return c_k(a, k);
    case SpaceKind::QC: return qc_k(a, k);
    case SpaceKind::ZDer: return zder_k(a, k);
  }
  throw std::logic_error("unreachable");
}

Aggregate aggregate(const HomAlgebra& a, SpaceKind kind, std::size_t max_power) {
  Aggregate agg{kind, max_power, {}, Subspace(a.dim() * a.dim()), false};
  std::size_t dim_sum = 0;
  for (std::size_t k = 0; k <= max_power; ++k) {
    agg.per_k.push_back(solve_space(a, kind, k));
    dim_sum += agg.per_k.back().dim();
    agg.total = subspace_sum(agg.total, agg.per_k.back().space);
  }
  agg.direct = agg.total.dim() == dim_sum;
  return agg;
}

Matrix nu(const Matrix& d1, const Matrix& d2) { return d1 * d2 + d2 * d1; }

Matrix nu_prime(const Matrix& d1, const Matrix& d2) { return d1 * d2 - d2 * d1; }

Matrix sigma_op(const HomAlgebra& a, const Matrix& d) { return a.alpha() * d; }

namespace {

bool commutes_with_twist(const HomAlgebra& a, const Matrix& op) {
  return op * a.alpha() == a.alpha() * op;
}

// Can (D', D'') (resp. D') be chosen so that op is a generalized derivation
// (resp. quasiderivation)? Decided by consistency of the inhomogeneous system.
bool extends_to_witness(const HomAlgebra& a, std::size_t k, const Matrix& op,
                        bool quasi) {
  std::size_t n = a.dim();
  Matrix ak = a.alpha().power(k);
  std::size_t blocks = quasi ? 1 : 2;
  std::vector<Vector> rows;
  std::size_t unknowns = blocks * n * n + 1;  // last column = RHS
  auto row_of = [&](std::size_t count) { return Vector(count, Scalar(0)); };
  auto commuting = [&](std::size_t b) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        Vector row = row_of(unknowns);
        for (std::size_t r = 0; r < n; ++r) {
          row[b * n * n + p * n + r] += a.alpha().at(r, q);
          row[b * n * n + r * n + q] -= a.alpha().at(p, r);
        }
        rows.push_back(std::move(row));
      }
  };
  for (std::size_t b = 0; b < blocks; ++b) commuting(b);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector dei = op.col(i), dej = op.col(j);
      Vector fixed_left = a.multiply(dei, ak.col(j));
      for (std::size_t m = 0; m < n; ++m) {
        Vector row = row_of(unknowns);
        if (quasi) {
          // mu(D e_i, a^k e_j) + mu(a^k e_i, D e_j) = D'(mu(e_i, e_j))
          Vector fixed = a.multiply(ak.col(i), dej);
          Vector w = a.basis_product(i, j);
          for (std::size_t q = 0; q < n; ++q) row[m * n + q] = w[q];
          row[unknowns - 1] = fixed_left[m] + fixed[m];
        } else {
          // mu(D e_i, a^k e_j) + mu(a^k e_i, D' e_j) = D''(mu(e_i, e_j))
          for (std::size_t p = 0; p < n; ++p) {
            Scalar coeff(0);
            for (std::size_t q = 0; q < n; ++q)
              coeff += ak.at(q, i) * a.c(q, p, m);
            row[p * n + j] = coeff;
          }
          Vector w = a.basis_product(i, j);
          for (std::size_t q = 0; q < n; ++q) row[n * n + m * n + q] = -w[q];
          row[unknowns - 1] = -fixed_left[m];
        }
        rows.push_back(std::move(row));
      }
    }
  Matrix full = Matrix::from_rows(rows, unknowns);
  Matrix lhs(full.rows(), unknowns - 1);
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t c2 = 0; c2 + 1 < unknowns; ++c2)
      lhs.at(r, c2) = full.at(r, c2);
  return rref(lhs).rank == rref(full).rank;
}

}  // namespace

bool satisfies_identity(const HomAlgebra& a, SpaceKind kind, std::size_t k,
                        const Matrix& op) {
  std::size_t n = a.dim();
  if (!commutes_with_twist(a, op)) return false;
  if (kind == SpaceKind::Commutant) return true;
  if (kind == SpaceKind::QDer) return extends_to_witness(a, k, op, true);
  if (kind == SpaceKind::GDer) return extends_to_witness(a, k, op, false);
  Matrix ak = a.alpha().power(k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector left = a.multiply(op.col(i), ak.col(j));
      Vector right = a.multiply(ak.col(i), op.col(j));
      Vector applied = op.apply(a.basis_product(i, j));
      switch (kind) {
        case SpaceKind::Der:
          for (std::size_t m = 0; m < n; ++m)
            if (applied[m] != left[m] + right[m]) return false;
          break;
        case SpaceKind::C:
          if (left != right || left != applied) return false;
          break;
        case SpaceKind::QC:
          if (left != right) return false;
          break;
        case SpaceKind::ZDer:
          for (std::size_t m = 0; m < n; ++m)
            if (!is_zero(left[m]) || !is_zero(applied[m])) return false;
          break;
        default:
          throw std::logic_error("unreachable");
      }
    }
  return true;
}

}  // namespace hja
