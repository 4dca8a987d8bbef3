#pragma once

#include <optional>

#include "hja/solve.hpp"

namespace hja {

// Witness carried by a failing verdict: the offending powers and operators,
// recorded so the failure can be re-established from scratch.
struct Counterexample {
  std::size_t k = 0;
  std::size_t s = 0;
  std::vector<Matrix> operators;
  std::string detail;
};

// Outcome of one structural claim checked on a concrete algebra up to a power
// bound. A claim whose hypotheses fail is reported as not applicable
// (preconditions_met = false, holds = true), never as a failure.
struct Verdict {
  std::string claim_id;
  bool holds = true;
  bool preconditions_met = true;
  std::size_t max_power = 0;
  std::optional<Counterexample> counterexample;
  std::string note;

  bool applicable_failure() const { return preconditions_met && !holds; }
};

// Closure of GDer/QDer/C under the commutator bracket and composition with
// alpha, and the ideal property of ZDer inside Der.
std::vector<Verdict> verify_family_closure(const HomAlgebra& a, std::size_t max_power);

// Six mixed inclusions between Der, QDer, GDer, C, QC.
std::vector<Verdict> verify_mixed_inclusions(const HomAlgebra& a, std::size_t max_power);

// GDer_k = QDer_k + QC_k per k, with the witness split into symmetric and
// antisymmetric halves exercised on every generator.
Verdict verify_gder_split(const HomAlgebra& a, std::size_t max_power);

// Block decomposition of the centralizer and of Der/GDer/QDer/C over a direct
// sum of two algebras.
std::vector<Verdict> verify_direct_sum_decomposition(const HomAlgebra& a1, const HomAlgebra& a2,
                                   std::size_t max_power);

// Brackets of C with QC land in operators mapping into the centralizer; zero
// when the centralizer is trivial.
Verdict verify_central_brackets(const HomAlgebra& a, std::size_t max_power);

// ZDer_k = C_k intersect Der_k per k.
Verdict verify_zder_intersection(const HomAlgebra& a, std::size_t max_power);

// QC with the anticommutator product and composition by alpha is itself a
// Hom-Jordan algebra; closure generator-wise, then the induced algebra on the
// aggregated QC space is validated directly.
Verdict verify_qc_jordan(const HomAlgebra& a, std::size_t max_power);

// Equivalence of bracket-closure, composition-closure, and bracket vanishing
// for QC.
std::vector<Verdict> verify_qc_lie_equivalences(const HomAlgebra& a, std::size_t max_power);

// All single-algebra claims above, in order.
std::vector<Verdict> closure_suite(const HomAlgebra& a, std::size_t max_power);

}  // namespace hja
