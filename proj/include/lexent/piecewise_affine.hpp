#pragma once

#include <vector>

#include "lexent/errors.hpp"
#include "lexent/real.hpp"
#include "lexent/symbolic_strings.hpp"

namespace lexent {

// Certified bracket for a limit value in [0, 1]; hi - lo is the truncation
// error. When non_contractive is set the interval only brackets the pair of
// extreme cluster values of the (possibly non-convergent) backward iteration.
struct Enclosure {
    Real lo, hi;
    bool non_contractive = false;

    Real width() const { return hi - lo; }
    Real mid() const { return (lo + hi) / 2; }
};

// The two extreme cluster values of the backward iteration at a fixed horizon.
struct ClusterPair {
    Real y_up, y_down;
};

enum class Validity { valid_by_slope, unknown };
enum class Side { lower, upper };
enum class Membership { inside, boundary, outside };

// An interval map on [0,1] with k affine monotone branches f_j(x) = s_j x + c_j
// on I_j = (a_j, a_{j+1}), each mapping into [0,1], whose inverse-branch
// contractions drive every limit evaluation in this library.
class PiecewiseAffineSystem {
  public:
    // breakpoints: a_0 = 0 < a_1 < ... < a_k = 1; one (slope, intercept) per branch.
    PiecewiseAffineSystem(std::vector<Real> breakpoints, std::vector<Real> slopes,
                          std::vector<Real> intercepts, double singular_tol = 1e-30);

    int branches() const { return k_; }
    const std::vector<Real>& breakpoints() const { return a_; }
    const SignVector& signs() const { return signs_; }
    Real slope(int j) const { return s_[static_cast<size_t>(j)]; }
    Real intercept(int j) const { return c_[static_cast<size_t>(j)]; }
    Real min_abs_slope() const;
    double singular_tol() const { return singular_tol_; }

    // f_j(x) for the unique branch interval containing x. Throws SingularPoint
    // when x is within singular_tol of a breakpoint.
    Real apply_T(const Real& x) const;

    // Clamped inverse of branch j evaluated at t in [0,1]; range [a_j, a_{j+1}].
    Real phi_bar_branch(Symbol j, const Real& t) const;

    // Backward composition along the word w seeded with t.
    Real phi_bar_n(const Word& w, const Real& t) const;

    // Limit of the backward iteration along x, bracketed by seeding with 0 and 1.
    // When every |s_j| > 1 the width is at most tol; otherwise the bracket is
    // evaluated at the capped horizon and flagged non_contractive.
    Enclosure phi_bar_infty(const EPString& x, double tol, long horizon_cap = 1000000) const;

    // Extreme cluster values at the capped horizon (same data as the flagged enclosure).
    ClusterPair cluster_points(const EPString& x, long horizon) const;

    // First n coding symbols of the orbit of x. Throws SingularOrbit.
    Word itinerary(const Real& x, int n) const;

    // Sufficient slope criterion; never claims invalidity.
    Validity validity_check() const;

    // One-sided coding at a partition point: side == lower gives the limit
    // coding just above a_j, side == upper just below a_{j+1}. Exact landings
    // on breakpoints are resolved by the approach side, so periodic boundary
    // codings come out exactly periodic.
    Word virtual_itinerary(Symbol j, Side side, int n) const;

    // Sandwich test of all shifts of x against the one-sided boundary codings,
    // decided on prefixes of length n.
    Membership membership(const EPString& x, int n) const;

  private:
    int k_;
    std::vector<Real> a_, s_, c_;
    SignVector signs_;
    double singular_tol_;

    int branch_of(const Real& x) const;  // -1 when singular
};

}  // namespace lexent
