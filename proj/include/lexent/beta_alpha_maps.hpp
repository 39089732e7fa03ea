#pragma once

#include <optional>

#include "lexent/algebraic.hpp"
#include "lexent/piecewise_affine.hpp"

namespace lexent {

// Parameters of the map x -> beta*x + alpha (mod 1) with alpha in [0,1],
// beta >= 1. Derived data: branch count k = ceil(alpha+beta) and
// gamma = alpha + beta - k + 1 in (0,1], with gamma = 1 at integer alpha+beta.
struct AlphaBetaParams {
    Real alpha, beta;
    int k = 0;
    Real gamma;
    // Present when the parameters are exact algebraic numbers in one field;
    // enables exact orbit codings with certified breakpoint hits.
    std::optional<FieldElem> alpha_exact, beta_exact;

    AlphaBetaParams(Real alpha_, Real beta_);
    AlphaBetaParams(const FieldElem& alpha_, const FieldElem& beta_);
};

// One kneading coding: the symbol prefix actually generated, and the exact
// eventually periodic closure when the tracked orbit state repeated.
struct Coding {
    Word prefix;
    bool closed = false;        // an exact (or assumed-hit) periodic closure was found
    bool assumed_hit = false;   // a breakpoint landing was only within tolerance
    std::optional<EPString> ep; // valid when closed
};

struct KneadingPair {
    Coding u, v;
    int k = 0;
};

// The k-branch affine system of the parameters (all branches increasing,
// slope beta, breakpoints a_j = (j - alpha)/beta).
PiecewiseAffineSystem make_system(const AlphaBetaParams& p, double singular_tol = 1e-30);

// Closed-form clamped inverse on [0, k]: 0 below alpha, (t-alpha)/beta on
// [alpha, alpha+beta], 1 above.
Real phi_bar_ab(const AlphaBetaParams& p, const Real& t);

// Certified enclosure of the backward limit along x, evaluated directly from
// (alpha, beta) without building a system; the workhorse of the fixed-point
// solver. Width <= tol when beta > 1.
Enclosure phi_inf_ab(const Real& alpha, const Real& beta, const EPString& x, double tol,
                     long horizon_cap = 1000000);

// One-sided orbit codings of 0 (lower) and 1 (upper): the kneading data.
// With exact parameters the orbit runs in exact field arithmetic and periodic
// closures are certified; with floating parameters a landing within hit_tol
// of a breakpoint is resolved one-sidedly and flagged assumed_hit.
KneadingPair orbit_codings(const AlphaBetaParams& p, int n, double hit_tol = 1e-9);

// The extremal alternative boundary expansions for purely periodic data:
// u_star = a' v with a' the period of u with last symbol decremented, and
// v_star = b' u with b' the period of v with last symbol incremented.
// A side whose precondition fails (not purely periodic, minimal period 1, or
// symbol under/overflow) is returned unchanged with its flag cleared.
struct StarStrings {
    EPString u_star, v_star;
    bool u_changed = false, v_changed = false;
};

StarStrings star_strings(const EPString& u, const EPString& v);

}  // namespace lexent
