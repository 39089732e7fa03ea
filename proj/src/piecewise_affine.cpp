#include "lexent/piecewise_affine.hpp"

#include <algorithm>

namespace lexent {

namespace {

// Compare a finite word against the prefix of an eventually periodic string
// under the sign rule; Ordering::equal means "no disagreement within |w|".
Ordering compare_word_prefix(const Word& w, const EPString& x, const SignVector& delta) {
    int sign = 1;
    for (size_t i = 0; i < w.size(); ++i) {
        Symbol a = w[i], b = x.at(static_cast<long>(i));
        if (a != b) {
            bool less = a < b;
            if (sign < 0) less = !less;
            return less ? Ordering::less : Ordering::greater;
        }
        sign *= delta[static_cast<size_t>(a)];
    }
    return Ordering::equal;
}

}  // namespace

PiecewiseAffineSystem::PiecewiseAffineSystem(std::vector<Real> breakpoints, std::vector<Real> slopes,
                                             std::vector<Real> intercepts, double singular_tol)
    : k_(static_cast<int>(slopes.size())),
      a_(std::move(breakpoints)),
      s_(std::move(slopes)),
      c_(std::move(intercepts)),
      singular_tol_(singular_tol) {
    if (k_ < 1 || a_.size() != static_cast<size_t>(k_ + 1) || c_.size() != static_cast<size_t>(k_))
        throw BadParams("system needs k branches and k+1 breakpoints");
    const Real eps = Real(1e-25);
    if (boost::multiprecision::abs(a_.front()) > eps || boost::multiprecision::abs(a_.back() - 1) > eps)
        throw BadParams("breakpoints must start at 0 and end at 1");
    for (int j = 0; j < k_; ++j) {
        if (a_[j + 1] <= a_[j]) throw BadParams("breakpoints must be strictly increasing");
        if (s_[j] == 0) throw BadParams("branch slopes must be nonzero");
        signs_.push_back(s_[j] > 0 ? 1 : -1);
        // Branch image must stay inside [0,1].
        Real y0 = s_[j] * a_[j] + c_[j];
        Real y1 = s_[j] * a_[j + 1] + c_[j];
        Real jlo = (std::min)(y0, y1), jhi = (std::max)(y0, y1);
        if (jlo < -eps || jhi > 1 + eps) throw BadParams("branch image leaves the unit interval");
    }
    // Covering condition: the union of the branch images must cover (0,1) up
    // to finitely many points, so every branch interval can be continued.
    std::vector<std::pair<Real, Real>> imgs;
    for (int j = 0; j < k_; ++j) {
        Real y0 = s_[j] * a_[j] + c_[j];
        Real y1 = s_[j] * a_[j + 1] + c_[j];
        imgs.emplace_back((std::min)(y0, y1), (std::max)(y0, y1));
    }
    std::sort(imgs.begin(), imgs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Real covered(0);
    for (const auto& [lo, hi] : imgs) {
        if (lo > covered + eps) throw BadParams("branch images do not cover the unit interval");
        covered = (std::max)(covered, hi);
    }
    if (covered < 1 - eps) throw BadParams("branch images do not cover the unit interval");
}

Real PiecewiseAffineSystem::min_abs_slope() const {
    Real m = boost::multiprecision::abs(s_[0]);
    for (const Real& s : s_) m = (std::min)(m, Real(boost::multiprecision::abs(s)));
    return m;
}

int PiecewiseAffineSystem::branch_of(const Real& x) const {
    for (int j = 0; j <= k_; ++j)
        if (boost::multiprecision::abs(x - a_[j]) < singular_tol_) return -1;
    for (int j = 0; j < k_; ++j)
        if (x > a_[j] && x < a_[j + 1]) return j;
    return -1;
}

Real PiecewiseAffineSystem::apply_T(const Real& x) const {
    int j = branch_of(x);
    if (j < 0) throw SingularPoint("point is at (or within tolerance of) a breakpoint");
    return s_[j] * x + c_[j];
}

Real PiecewiseAffineSystem::phi_bar_branch(Symbol j, const Real& t) const {
    Real y = (t - c_[j]) / s_[j];
    if (y < a_[j]) return a_[j];
    if (y > a_[j + 1]) return a_[j + 1];
    return y;
}

Real PiecewiseAffineSystem::phi_bar_n(const Word& w, const Real& t) const {
    if (w.empty()) throw EmptyWord();
    Real acc = t;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = phi_bar_branch(*it, acc);
    return acc;
}

Enclosure PiecewiseAffineSystem::phi_bar_infty(const EPString& x, double tol, long horizon_cap) const {
    Real m = min_abs_slope();
    bool contractive = m > 1;
    bool capped = false;
    long n;
    if (contractive) {
        Real need = boost::multiprecision::log(Real(1) / Real(tol)) / boost::multiprecision::log(m);
        n = static_cast<long>(boost::multiprecision::ceil(need).convert_to<long>()) + 1;
        n = std::max<long>(n, 4);
        if (n > horizon_cap) {
            // The capped enclosure loses its width guarantee; report it like
            // the non-contractive case so callers fall back to midpoints
            // instead of requesting ever deeper horizons.
            n = horizon_cap;
            capped = true;
        }
    } else {
        n = std::min<long>(horizon_cap, x.shift_bound() * 8 + 256);
    }
    Real t0(0), t1(1);
    for (long i = n - 1; i >= 0; --i) {
        Symbol z = x.at(i);
        t0 = phi_bar_branch(z, t0);
        t1 = phi_bar_branch(z, t1);
    }
    Enclosure e{(std::min)(t0, t1), (std::max)(t0, t1), !contractive || capped};
    return e;
}

ClusterPair PiecewiseAffineSystem::cluster_points(const EPString& x, long horizon) const {
    Real t0(0), t1(1);
    for (long i = horizon - 1; i >= 0; --i) {
        Symbol z = x.at(i);
        t0 = phi_bar_branch(z, t0);
        t1 = phi_bar_branch(z, t1);
    }
    return {(std::max)(t0, t1), (std::min)(t0, t1)};
}

Word PiecewiseAffineSystem::itinerary(const Real& x, int n) const {
    Word w;
    Real y = x;
    for (int i = 0; i < n; ++i) {
        int j = branch_of(y);
        if (j < 0) throw SingularOrbit(i);
        w.push_back(j);
        y = s_[j] * y + c_[j];
    }
    return w;
}

Validity PiecewiseAffineSystem::validity_check() const {
    return min_abs_slope() > 1 ? Validity::valid_by_slope : Validity::unknown;
}

Word PiecewiseAffineSystem::virtual_itinerary(Symbol j, Side side, int n) const {
    // Track the orbit of a_j + eps (side == lower) or a_{j+1} - eps (upper):
    // the point itself plus the sign of the infinitesimal offset.
    Real x = side == Side::lower ? a_[j] : a_[j + 1];
    int off = side == Side::lower ? +1 : -1;
    Word w;
    for (int i = 0; i < n; ++i) {
        int b;
        if (boost::multiprecision::abs(x) < singular_tol_) {
            b = 0;  // just above the left endpoint
        } else if (boost::multiprecision::abs(x - 1) < singular_tol_) {
            b = k_ - 1;  // just below the right endpoint
        } else {
            b = -1;
            for (int m = 1; m < k_; ++m) {
                if (boost::multiprecision::abs(x - a_[m]) < singular_tol_) {
                    // Exact landing on a breakpoint: the offset side chooses
                    // the branch and keeps the coding exactly periodic.
                    b = off > 0 ? m : m - 1;
                    x = a_[m];
                    break;
                }
            }
            if (b < 0) b = branch_of(x);
            if (b < 0) throw SingularPoint("virtual itinerary lost the orbit at a breakpoint");
        }
        w.push_back(b);
        x = s_[b] * x + c_[b];
        off *= signs_[static_cast<size_t>(b)];
        if (x < 0) x = 0;
        if (x > 1) x = 1;
    }
    return w;
}

Membership PiecewiseAffineSystem::membership(const EPString& x, int n) const {
    bool boundary = false;
    long shifts = std::min<long>(n, x.shift_bound());
    for (long m = 0; m < shifts; ++m) {
        EPString sx = x.shift(m);
        Symbol j = sx.at(0);
        Word lo = virtual_itinerary(j, Side::lower, n);
        Word hi = virtual_itinerary(j, Side::upper, n);
        Ordering below = compare_word_prefix(lo, sx, signs_);
        Ordering above = compare_word_prefix(hi, sx, signs_);
        if (below == Ordering::greater || above == Ordering::less) return Membership::outside;
        if (below == Ordering::equal || above == Ordering::equal) boundary = true;
    }
    return boundary ? Membership::boundary : Membership::inside;
}

}  // namespace lexent
