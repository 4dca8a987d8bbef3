#include "hja/json_io.hpp"

namespace hja {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(format_scalar(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix json: not an array");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols)
      throw std::invalid_argument("matrix json: ragged rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(i, c) = parse_scalar(j.at(i).at(c).get<std::string>());
  }
  return m;
}

json subspace_to_json(const Subspace& s) {
  json basis = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (const Scalar& e : s.basis_vector(i)) row.push_back(format_scalar(e));
    basis.push_back(std::move(row));
  }
  return json{{"ambient_dim", s.ambient_dim()},
              {"dim", s.dim()},
              {"basis", std::move(basis)}};
}

json algebra_to_json(const HomAlgebra& a) {
  std::size_t n = a.dim();
  json mu = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json plane = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json row = json::array();
      for (std::size_t k = 0; k < n; ++k)
        row.push_back(format_scalar(a.c(i, j, k)));
      plane.push_back(std::move(row));
    }
    mu.push_back(std::move(plane));
  }
  return json{{"name", a.name()},
              {"dim", n},
              {"alpha", matrix_to_json(a.alpha())},
              {"mu", std::move(mu)},
              {"flags",
               {{"commutative_checked", a.flags().commutative_checked},
                {"hom_jordan_checked", a.flags().hom_jordan_checked},
                {"multiplicative_checked", a.flags().multiplicative_checked},
                {"asserted_simple", a.flags().asserted_simple}}}};
}

HomAlgebra algebra_from_json(const json& j) {
  std::size_t n = j.at("dim").get<std::size_t>();
  const json& mu_json = j.at("mu");
  if (mu_json.size() != n)
    throw std::invalid_argument("algebra json: mu has wrong shape");
  std::vector<Scalar> mu(n * n * n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (mu_json.at(i).size() != n)
      throw std::invalid_argument("algebra json: mu has wrong shape");
    for (std::size_t jj = 0; jj < n; ++jj) {
      if (mu_json.at(i).at(jj).size() != n)
        throw std::invalid_argument("algebra json: mu has wrong shape");
      for (std::size_t k = 0; k < n; ++k)
        mu[(i * n + jj) * n + k] =
            parse_scalar(mu_json.at(i).at(jj).at(k).get<std::string>());
    }
  }
  Matrix alpha = matrix_from_json(j.at("alpha"));
  if (alpha.rows() != n || alpha.cols() != n)
    throw std::invalid_argument("algebra json: alpha has wrong shape");
  AlgebraFlags flags;
  if (j.contains("flags")) {
    const json& f = j.at("flags");
    flags.commutative_checked = f.value("commutative_checked", false);
    flags.hom_jordan_checked = f.value("hom_jordan_checked", false);
    flags.multiplicative_checked = f.value("multiplicative_checked", false);
    flags.asserted_simple = f.value("asserted_simple", false);
  }
  return HomAlgebra(n, std::move(mu), std::move(alpha),
                    j.value("name", std::string{}), flags);
}

json map_space_to_json(const MapSpace& m) {
  json basis = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (const Scalar& e : m.space.basis_vector(i))
      row.push_back(format_scalar(e));
    basis.push_back(std::move(row));
  }
  return json{{"kind", kind_name(m.kind)},
              {"k", m.k},
              {"dim", m.dim()},
              {"basis", std::move(basis)}};
}

json verdict_to_json(const Verdict& v) {
  json out{{"claim_id", v.claim_id},
           {"holds", v.holds},
           {"preconditions_met", v.preconditions_met},
           {"max_power", v.max_power},
           {"note", v.note}};
  if (v.counterexample) {
    json ops = json::array();
    for (const Matrix& m : v.counterexample->operators)
      ops.push_back(matrix_to_json(m));
    out["counterexample"] = json{{"k", v.counterexample->k},
                                 {"s", v.counterexample->s},
                                 {"operators", std::move(ops)},
                                 {"detail", v.counterexample->detail}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace hja
