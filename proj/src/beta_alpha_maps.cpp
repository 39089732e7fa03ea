#include "lexent/beta_alpha_maps.hpp"

#include <map>
#include <string>

namespace lexent {

namespace {

void validate_params(const Real& alpha, const Real& beta) {
    if (alpha < 0 || alpha > 1) throw BadParams("alpha must lie in [0,1]");
    if (beta < 1) throw BadParams("beta must be at least 1");
}

// ceil(alpha+beta) with the convention that an integer sum s gives k = s
// (so gamma = 1); a small guard absorbs floating representation noise.
int derive_k(const Real& s) {
    Real guarded = s - Real(1e-9);
    long f = boost::multiprecision::floor(guarded).convert_to<long>();
    return static_cast<int>(f) + 1;
}

}  // namespace

AlphaBetaParams::AlphaBetaParams(Real alpha_, Real beta_) : alpha(std::move(alpha_)), beta(std::move(beta_)) {
    validate_params(alpha, beta);
    k = derive_k(alpha + beta);
    gamma = alpha + beta - k + 1;
}

AlphaBetaParams::AlphaBetaParams(const FieldElem& a, const FieldElem& b)
    : alpha(a.to_real()), beta(b.to_real()), alpha_exact(a), beta_exact(b) {
    validate_params(alpha, beta);
    // Exact integer bracket of alpha + beta: find k with k-1 < s <= k.
    FieldElem s = a + b;
    auto [lo, hi] = s.approx(Rational(1, 4));
    long guess = static_cast<long>(boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo));
    k = 0;
    for (long m = guess - 2; m <= guess + 3; ++m) {
        int above = (s - FieldElem(Rational(m - 1))).sign();
        int upto = (s - FieldElem(Rational(m))).sign();
        if (above > 0 && upto <= 0) {
            k = static_cast<int>(m);
            break;
        }
    }
    if (k == 0) throw BadParams("failed to derive the branch count");
    gamma = alpha + beta - k + 1;
}

PiecewiseAffineSystem make_system(const AlphaBetaParams& p, double singular_tol) {
    std::vector<Real> a, s, c;
    a.push_back(Real(0));
    for (int j = 1; j < p.k; ++j) a.push_back((Real(j) - p.alpha) / p.beta);
    a.push_back(Real(1));
    for (int j = 0; j < p.k; ++j) {
        s.push_back(p.beta);
        c.push_back(p.alpha - j);
    }
    return PiecewiseAffineSystem(std::move(a), std::move(s), std::move(c), singular_tol);
}

Real phi_bar_ab(const AlphaBetaParams& p, const Real& t) {
    Real y = (t - p.alpha) / p.beta;
    if (y < 0) return Real(0);
    if (y > 1) return Real(1);
    return y;
}

Enclosure phi_inf_ab(const Real& alpha, const Real& beta, const EPString& x, double tol, long horizon_cap) {
    bool contractive = beta > 1;
    long n;
    if (contractive) {
        Real need = boost::multiprecision::log(Real(1) / Real(tol)) / boost::multiprecision::log(beta);
        n = boost::multiprecision::ceil(need).convert_to<long>() + 2;
        n = std::max<long>(n, 4);
        n = std::min(n, horizon_cap);
    } else {
        n = std::min<long>(horizon_cap, x.shift_bound() * 8 + 256);
    }
    Real t0(0), t1(1);
    for (long i = n - 1; i >= 0; --i) {
        Real z(x.at(i));
        t0 = (z + t0 - alpha) / beta;
        if (t0 < 0) t0 = 0;
        if (t0 > 1) t0 = 1;
        t1 = (z + t1 - alpha) / beta;
        if (t1 < 0) t1 = 0;
        if (t1 > 1) t1 = 1;
    }
    return Enclosure{(std::min)(t0, t1), (std::max)(t0, t1), !contractive};
}

namespace {

// Exact one-sided orbit of an endpoint in field arithmetic. off = +1 tracks
// x + eps, off = -1 tracks x - eps; all branches increase so off is constant.
Coding run_exact(const AlphaBetaParams& p, int start, int off, int n) {
    const FieldElem& alpha = *p.alpha_exact;
    const FieldElem& beta = *p.beta_exact;
    FieldElem x{Rational(start)};
    Coding out;
    std::map<std::string, size_t> seen;
    for (int step = 0; step < n; ++step) {
        std::string state = x.key() + (off > 0 ? "+" : "-");
        auto [it, fresh] = seen.emplace(state, out.prefix.size());
        if (!fresh) {
            Word pre(out.prefix.begin(), out.prefix.begin() + it->second);
            Word per(out.prefix.begin() + it->second, out.prefix.end());
            out.closed = true;
            out.ep = EPString(std::move(pre), std::move(per), p.k);
            return out;
        }
        FieldElem w = beta * x + alpha;
        // Locate w among the integers: exact landing or open unit interval.
        auto [lo, hi] = w.approx(Rational(1, 4));
        long base = static_cast<long>(boost::multiprecision::numerator(lo) / boost::multiprecision::denominator(lo));
        int emit = -1;
        bool hit = false;
        for (long m = base - 1; m <= base + 2; ++m) {
            int sgn = (w - FieldElem(Rational(m))).sign();
            if (sgn == 0) {
                emit = static_cast<int>(off > 0 ? m : m - 1);
                hit = true;
                break;
            }
            if (sgn > 0 && (w - FieldElem(Rational(m + 1))).sign() < 0) {
                emit = static_cast<int>(m);
                break;
            }
        }
        if (emit < 0) throw BadParams("exact orbit step failed to locate the branch");
        out.prefix.push_back(emit);
        x = hit ? FieldElem(Rational(off > 0 ? 0 : 1)) : w - FieldElem(Rational(emit));
    }
    return out;
}

// Floating variant: a landing within hit_tol of an integer image is treated
// as an exact breakpoint hit (flagged), which re-anchors the orbit at an
// endpoint and makes periodic closures detectable.
Coding run_numeric(const AlphaBetaParams& p, int start, int off, int n, double hit_tol) {
    Real x(start);
    Coding out;
    std::map<std::string, size_t> seen;
    bool anchored = true;  // x currently holds an exact endpoint value
    for (int step = 0; step < n; ++step) {
        if (anchored) {
            std::string state = (x == 0 ? "0" : "1") + std::string(off > 0 ? "+" : "-");
            auto [it, fresh] = seen.emplace(state, out.prefix.size());
            if (!fresh) {
                Word pre(out.prefix.begin(), out.prefix.begin() + it->second);
                Word per(out.prefix.begin() + it->second, out.prefix.end());
                out.closed = true;
                out.ep = EPString(std::move(pre), std::move(per), p.k);
                return out;
            }
        }
        Real w = p.beta * x + p.alpha;
        long m = boost::multiprecision::floor(w + Real(0.5)).convert_to<long>();
        if (boost::multiprecision::abs(w - m) < hit_tol && m >= 0 && m <= p.k) {
            int emit = static_cast<int>(off > 0 ? m : m - 1);
            out.prefix.push_back(emit);
            if (boost::multiprecision::abs(w - m) > 1e-28) out.assumed_hit = true;
            x = Real(off > 0 ? 0 : 1);
            anchored = true;
        } else {
            long j = boost::multiprecision::floor(w).convert_to<long>();
            j = std::max<long>(0, std::min<long>(j, p.k - 1));
            out.prefix.push_back(static_cast<int>(j));
            x = w - j;
            anchored = false;
        }
    }
    return out;
}

}  // namespace

KneadingPair orbit_codings(const AlphaBetaParams& p, int n, double hit_tol) {
    if (p.alpha >= 1) throw BadParams("orbit codings require alpha in [0,1)");
    KneadingPair kp;
    kp.k = p.k;
    if (p.alpha_exact && p.beta_exact) {
        kp.u = run_exact(p, 0, +1, n);
        kp.v = run_exact(p, 1, -1, n);
    } else {
        kp.u = run_numeric(p, 0, +1, n, hit_tol);
        kp.v = run_numeric(p, 1, -1, n, hit_tol);
    }
    return kp;
}

StarStrings star_strings(const EPString& u, const EPString& v) {
    if (u.alphabet() != v.alphabet())
        throw AlphabetMismatch("star construction needs a common alphabet");
    int k = u.alphabet();
    StarStrings out{u, v, false, false};
    if (u.pre().empty() && u.per().size() > 1 && u.per().back() >= 1) {
        Word a_prime = u.per();
        a_prime.back() -= 1;
        Word pre = a_prime;
        pre.insert(pre.end(), v.pre().begin(), v.pre().end());
        out.u_star = EPString(std::move(pre), v.per(), k);
        out.u_changed = true;
    }
    if (v.pre().empty() && v.per().size() > 1 && v.per().back() <= k - 2) {
        Word b_prime = v.per();
        b_prime.back() += 1;
        Word pre = b_prime;
        pre.insert(pre.end(), u.pre().begin(), u.pre().end());
        out.v_star = EPString(std::move(pre), u.per(), k);
        out.v_changed = true;
    }
    return out;
}

}  // namespace lexent
