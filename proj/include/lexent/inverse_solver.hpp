#pragma once

#include <optional>
#include <string>

#include "lexent/entropy_solver.hpp"

namespace lexent {

enum class Verdict { matched, not_representable, undetermined };
enum class DecisionCase {
    T41_case1,        // strict entropy gap
    T41_case2,        // equal growth, codings not both periodic
    T41_case3,        // equal growth, both codings periodic
    T42_less,         // alternative expansion below v
    T42_greater,      // alternative expansion above v
    T42_inapplicable
};

struct InverseDecision {
    Verdict verdict = Verdict::undetermined;
    DecisionCase decision_case = DecisionCase::T42_inapplicable;
    Real alpha_bar, beta_bar;
    Real beta_hat_value;
    // Evidence for the verdict.
    std::string u_hat;                      // sup of shifts of u
    std::string coding_u, coding_v;         // codings regenerated at (alpha_bar, beta_bar)
    bool coding_u_periodic = false, coding_v_periodic = false;
    std::string u_star;                     // alternative expansion, when used
    std::string notes;

    std::string to_json() const;
};

struct BetaHatResult {
    Real value;           // 2^{h of the pair (u, sup-shift of u)}
    EntropyReport report; // solver report for that pair
    EPString u_hat;
};

// Growth rate of the auxiliary pair (u, sup-shift of u), computed over the
// minimal alphabet of u. Requires u to start with 0 and be minimal among its
// shifts.
BetaHatResult beta_hat(const EPString& u, double tol = 1e-12);

// Full decision procedure: is (u, v) the boundary coding pair of some map
// beta*x + alpha mod 1? Throws ConditionViolation when the strict
// admissibility inequalities fail.
InverseDecision decide(const EPString& u, const EPString& v, double tol = 1e-12);

// Boundary certificates: enclosures of the backward limits of all distinct
// shifts of u and v, with the minimal distances of the u-family from 1 and of
// the v-family from 0.
struct ResidualRecord {
    std::vector<Enclosure> u_values, v_values;
    Real u_gap_from_one, v_gap_from_zero;
};

ResidualRecord kneading_residuals(const EPString& u, const EPString& v, const Real& alpha,
                                  const Real& beta, double tol = 1e-12);

}  // namespace lexent
