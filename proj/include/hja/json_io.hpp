#pragma once

#include "hja/centroid.hpp"
#include "hja/solve.hpp"
#include "json.hpp"

namespace hja {

// All scalars serialize as canonical "p/q" strings ("p" when q = 1).

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);

// {"name", "dim", "alpha", "mu", "flags"}; mu as an n x n x n nested array.
nlohmann::json algebra_to_json(const HomAlgebra& a);
HomAlgebra algebra_from_json(const nlohmann::json& j);

// {"kind", "k", "dim", "basis"}.
nlohmann::json map_space_to_json(const MapSpace& m);

nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace hja
