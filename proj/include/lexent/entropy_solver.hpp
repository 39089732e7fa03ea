#pragma once

#include <string>
#include <vector>

#include "lexent/beta_alpha_maps.hpp"

namespace lexent {

struct TraceStep {
    int n;
    Real alpha, beta, gamma;
    Real residual;  // defect of the equation solved at this step
};

struct EntropyReport {
    Real alpha_bar, beta_bar, gamma_bar;
    Real entropy_log2;
    int k = 0;
    std::string special_case;        // empty, "sigma_v_zero", "sigma_u_top", "k2_reversed"
    bool beta_bar_is_one = false;
    bool k2_reversed = false;
    bool max_iter_exceeded = false;
    std::vector<TraceStep> trace;
    Real residual_u, residual_v;     // fixed-point defects at the returned parameters

    std::string to_json() const;
};

// Enclosure of the backward limit along x for the given parameters.
Enclosure eval_sigma(const EPString& x, const AlphaBetaParams& p, double tol,
                     long horizon_cap = 1000000);

// Solve phi_inf^{alpha, beta(gamma)}(sigma v) = gamma for gamma, where
// beta(gamma) = gamma - alpha + k - 1; the left side minus gamma is strictly
// decreasing, bracketed on [alpha, 1] (k = 2) or [0, 1] (k >= 3).
Real solve_gamma_step(const Real& alpha, const EPString& v, double tol,
                      long horizon_cap = 1000000);

// Solve phi_inf^{alpha, beta(alpha)}(sigma u) = alpha for alpha with gamma
// fixed, bracketed on [alpha_lo, gamma) (k = 2) or [alpha_lo, 1) (k >= 3).
Real solve_alpha_step(const Real& gamma, const EPString& u, double tol,
                      long horizon_cap = 1000000, const Real& alpha_lo = Real(0));

// Alternating fixed-point computation of (alpha_bar, beta_bar) for an
// admissible pair, including the degenerate shortcuts, with
// entropy_log2 = log2(beta_bar).
EntropyReport compute_bar(const EPString& u, const EPString& v, double tol = 1e-12,
                          int max_iter = 200, long horizon_cap = 1000000);

// Falsification probe of uniqueness: random parameters on the gamma-constraint
// curve away from the solution must leave a visible fixed-point defect.
bool verify_uniqueness(const EPString& u, const EPString& v, const EntropyReport& report,
                       int probes = 32, unsigned seed = 12345);

}  // namespace lexent
