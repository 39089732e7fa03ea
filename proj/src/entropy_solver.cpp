#include "lexent/entropy_solver.hpp"

#include <random>

#include <json.hpp>

namespace lexent {

namespace {

// Sign of phi_inf^{alpha,beta}(x) - ref with enclosure-safe decisions: a sign
// is only reported when the enclosure excludes the reference value; otherwise
// the evaluation horizon is tightened before falling back to the midpoint.
int safe_sign(const Real& alpha, const Real& beta, const EPString& x, const Real& ref,
              double tol, long horizon_cap) {
    double target = tol / 8;
    for (int round = 0; round < 4; ++round) {
        Enclosure e = phi_inf_ab(alpha, beta, x, target, horizon_cap);
        if (e.lo - ref > 0) return 1;
        if (e.hi - ref < 0) return -1;
        if (e.non_contractive) {
            Real d = e.mid() - ref;
            if (boost::multiprecision::abs(d) <= tol) return 0;
            return d > 0 ? 1 : -1;
        }
        if (e.width() <= tol / 4) return 0;
        target /= 16;
    }
    return 0;
}

Real clamp01(Real x) {
    if (x < 0) return Real(0);
    if (x > 1) return Real(1);
    return x;
}

}  // namespace

Enclosure eval_sigma(const EPString& x, const AlphaBetaParams& p, double tol, long horizon_cap) {
    return phi_inf_ab(p.alpha, p.beta, x, tol, horizon_cap);
}

Real solve_gamma_step(const Real& alpha, const EPString& v, double tol, long horizon_cap) {
    int k = v.alphabet();
    EPString sv = v.shift(1);
    Real lo = k == 2 ? alpha : Real(0);
    Real hi(1);
    auto g_sign = [&](const Real& gamma) {
        Real beta = gamma - alpha + k - 1;
        return safe_sign(alpha, beta, sv, gamma, tol, horizon_cap);
    };
    // The defect is strictly decreasing in gamma; handle roots at the ends.
    if (g_sign(hi) >= 0) return hi;
    if (g_sign(lo) <= 0) return lo;
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        int s = g_sign(mid);
        if (s == 0) return mid;
        if (s > 0)
            lo = mid;
        else
            hi = mid;
    }
    // The alternating scheme approaches gamma from above; report the upper
    // bracket end so coarse inner tolerances never overshoot the root.
    return hi;
}

Real solve_alpha_step(const Real& gamma, const EPString& u, double tol, long horizon_cap,
                      const Real& alpha_lo) {
    int k = u.alphabet();
    EPString su = u.shift(1);
    Real lo = alpha_lo;
    Real hi = k == 2 ? gamma : Real(1);
    auto h_sign = [&](const Real& alpha) {
        Real beta = gamma - alpha + k - 1;
        return safe_sign(alpha, beta, su, alpha, tol, horizon_cap);
    };
    if (h_sign(lo) <= 0) return lo;
    if (h_sign(hi) >= 0) return hi;
    while (hi - lo > tol) {
        Real mid = (lo + hi) / 2;
        int s = h_sign(mid);
        if (s == 0) return mid;
        if (s > 0)
            lo = mid;
        else
            hi = mid;
    }
    // Alpha is approached from below; the lower end keeps the iterate a
    // valid lower bound even at coarse inner tolerances.
    return lo;
}

EntropyReport compute_bar(const EPString& u, const EPString& v, double tol, int max_iter,
                          long horizon_cap) {
    if (u.alphabet() != v.alphabet())
        throw AlphabetMismatch("bounding strings over different alphabets");
    int k = u.alphabet();
    ConditionReport cr = check_conditions(u, v);
    if (!cr.endpoints_ok || !cr.weak_ok)
        throw ConditionViolation("pair is not admissible: " + cr.violation);

    EntropyReport rep;
    rep.k = k;
    auto finish_special = [&](const char* name, Real a, Real b, Real g) {
        rep.special_case = name;
        rep.alpha_bar = std::move(a);
        rep.beta_bar = std::move(b);
        rep.gamma_bar = std::move(g);
        rep.beta_bar_is_one = rep.beta_bar <= 1 + 10 * tol;
        rep.entropy_log2 = rep.beta_bar > 1 ? log2r(rep.beta_bar) : Real(0);
        rep.residual_u = rep.residual_v = Real(0);
        return rep;
    };

    EPString su = u.shift(1), sv = v.shift(1);
    if (k == 2 && compare_lex(sv, su) == Ordering::less) {
        rep.k2_reversed = true;
        return finish_special("k2_reversed", Real(0), Real(1), Real(0));
    }
    if (sv == EPString::constant(0, k))
        return finish_special("sigma_v_zero", Real(0), Real(k - 1), Real(0));
    if (su == EPString::constant(k - 1, k))
        return finish_special("sigma_u_top", Real(1), Real(k), Real(1));

    Real alpha(0), beta(k), gamma(1);
    rep.trace.push_back({0, alpha, beta, gamma, Real(0)});
    bool converged = false;
    int step = 0;
    // Inner solves only need resolution somewhat below the current step size;
    // starting coarse and tightening with progress avoids deep evaluation
    // horizons (expensive when beta is near 1) on early iterations.
    double itol = std::max(tol, 1e-4);
    auto tighten = [&](const Real& dbeta) {
        double d = static_cast<double>(boost::multiprecision::abs(dbeta));
        itol = std::max(tol, std::min(itol, d / 64));
    };
    // Warm-started variants of the two half-steps: the iteration moves gamma
    // down and alpha up monotonically, so the previous iterate brackets one
    // side and a doubling search from it finds the other, replacing a
    // full-range bisection (~40 sign evaluations) by ~10.
    Real dg(1), da(1);  // most recent half-step sizes
    auto gamma_from = [&](const Real& a, const Real& gamma_prev, const Real& span0,
                          long cap = 0) {
        if (cap == 0) cap = horizon_cap;
        Real floor_g = k == 2 ? a : Real(0);
        auto g_sign = [&](const Real& g) {
            return safe_sign(a, g - a + k - 1, sv, g, itol, cap);
        };
        Real hi = gamma_prev;
        if (g_sign(hi) >= 0) return hi;
        Real span = span0;
        Real lo = hi - span;
        while (lo > floor_g && g_sign(lo) < 0) {
            hi = lo;
            span *= 4;
            lo = hi - span;
        }
        if (lo <= floor_g) {
            lo = floor_g;
            if (g_sign(lo) <= 0) return lo;
        }
        while (hi - lo > itol) {
            Real mid = (lo + hi) / 2;
            int s = g_sign(mid);
            if (s == 0) return mid;
            if (s > 0)
                lo = mid;
            else
                hi = mid;
        }
        return hi;
    };
    auto alpha_from = [&](const Real& g, const Real& alpha_prev, const Real& span0) {
        Real ceil_a = k == 2 ? g : Real(1);
        auto h_sign = [&](const Real& a) {
            return safe_sign(a, g - a + k - 1, su, a, itol, horizon_cap);
        };
        Real lo = alpha_prev;
        if (h_sign(lo) <= 0) return lo;
        Real span = span0;
        Real hi = lo + span;
        while (hi < ceil_a && h_sign(hi) > 0) {
            lo = hi;
            span *= 4;
            hi = lo + span;
        }
        if (hi >= ceil_a) {
            hi = ceil_a;
            if (h_sign(hi) >= 0) return hi;
        }
        while (hi - lo > itol) {
            Real mid = (lo + hi) / 2;
            int s = h_sign(mid);
            if (s == 0) return mid;
            if (s > 0)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    };
    // Sign of the cycle defect W(a) = phi_inf^{a,beta(a)}(sigma u) - a at the
    // gamma solved for a: positive below the fixed point, negative above.
    auto cycle_sign = [&](const Real& a, const Real& gamma_hint, const Real& span,
                          Real& gamma_out, Real& beta_out) {
        gamma_out = gamma_from(a, gamma_hint, span);
        beta_out = gamma_out - a + k - 1;
        return safe_sign(a, beta_out, su, a, itol, horizon_cap);
    };
    // beta decreases along the iteration, so crossing this floor certifies
    // zero entropy up to the floor's resolution; the endgame below it is
    // skipped (evaluation horizons grow like 1/(beta - 1), and the residual
    // guarantee loses meaning as the contraction degenerates).
    Real beta_floor = Real(1) + Real(std::max(1000 * tol, 1e-6));
    std::vector<Real> cycle_alpha;  // alpha after each completed cycle
    bool just_jumped = false;
    for (int n = 1; n <= max_iter && !converged; ++n) {
        Real beta_cycle_start = beta;
        Real gamma_new = gamma_from(alpha, gamma, 8 * dg + Real(itol));
        dg = gamma - gamma_new;
        Real beta_new = gamma_new - alpha + k - 1;
        Real res_g = boost::multiprecision::abs(
            phi_inf_ab(alpha, beta_new, sv, itol / 8, horizon_cap).mid() - gamma_new);
        rep.trace.push_back({++step, alpha, beta_new, gamma_new, res_g});
        // Right after a jump this gamma step reproduces the jump's beta, so
        // the step-to-step test would be vacuous; skip it once.
        converged = !just_jumped && itol <= tol &&
                    boost::multiprecision::abs(beta_new - beta) < tol;
        just_jumped = false;
        tighten(beta_new - beta);
        gamma = gamma_new;
        beta = beta_new;
        if (converged || beta <= beta_floor) break;

        Real alpha_new = alpha_from(gamma, alpha, 8 * da + Real(itol));
        da = alpha_new - alpha;
        beta_new = gamma - alpha_new + k - 1;
        Real res_h = boost::multiprecision::abs(
            phi_inf_ab(alpha_new, beta_new, su, itol / 8, horizon_cap).mid() - alpha_new);
        rep.trace.push_back({++step, alpha_new, beta_new, gamma, res_h});
        converged = itol <= tol && boost::multiprecision::abs(beta_new - beta) < tol;
        tighten(beta_new - beta);
        alpha = alpha_new;
        beta = beta_new;
        if (beta <= beta_floor) break;
        cycle_alpha.push_back(alpha);

        // Slow (near-neutral) linear convergence: extrapolate the alpha
        // sequence and either jump forward (still below the fixed point) or
        // bisect the bracket the overshoot provides.
        size_t m = cycle_alpha.size();
        if (!converged && m >= 4 && m % 4 == 0) {
            const Real &a0 = cycle_alpha[m - 3], &a1 = cycle_alpha[m - 2], &a2 = cycle_alpha[m - 1];
            Real denom = a2 - 2 * a1 + a0;
            if (denom != 0) {
                Real target = a2 - (a2 - a1) * (a2 - a1) / denom;
                Real upper = (k == 2 ? gamma : Real(1)) - Real(tol);
                if (target > alpha + tol && target < upper) {
                    Real g_t, b_t;
                    Real jump_span = 8 * (target - alpha) + Real(itol);
                    int s = cycle_sign(target, gamma, jump_span, g_t, b_t);
                    if (s > 0 || (s == 0 && itol > tol)) {
                        // Fixed point is at or above the extrapolation at the
                        // current resolution: jump.
                        dg = gamma - g_t;
                        da = target - alpha;
                        alpha = target;
                        gamma = g_t;
                        beta = b_t;
                        rep.trace.push_back({++step, alpha, beta, gamma, Real(0)});
                        just_jumped = true;
                        cycle_alpha.clear();
                    } else if (s == 0) {
                        alpha = target;
                        gamma = g_t;
                        beta = b_t;
                        rep.trace.push_back({++step, alpha, beta, gamma, Real(0)});
                        converged = true;
                    } else {
                        // Overshot: the root lies in [alpha, target]. This is
                        // the endgame, so finish at full resolution.
                        itol = tol;
                        Real lo = alpha, hi = target;
                        while (hi - lo > tol) {
                            Real mid = (lo + hi) / 2;
                            int sm = cycle_sign(mid, gamma, hi - lo + Real(itol), g_t, b_t);
                            if (sm == 0) {
                                lo = hi = mid;
                                gamma = g_t;
                                beta = b_t;
                                break;
                            }
                            if (sm > 0) {
                                lo = mid;
                                gamma = g_t;
                                beta = b_t;
                            } else {
                                hi = mid;
                            }
                        }
                        alpha = lo;
                        gamma = gamma_from(alpha, gamma, Real(16 * tol));
                        beta = gamma - alpha + k - 1;
                        rep.trace.push_back({++step, alpha, beta, gamma, Real(0)});
                        converged = true;
                    }
                }
            }
        }

        // Boundary pairs make the cycle map tangent to the identity at its
        // fixed point: progress decays like 1/n and the defect W keeps one
        // sign, so neither the step criterion nor sign bisection can finish.
        // Detect the stall and localize the root by expanding forward until
        // the defect flips sign (bisect), its magnitude turns back up
        // (ternary-minimize the tangent root), or beta is certified at the
        // zero-entropy floor.
        bool stalled = !converged && itol <= tol &&
                       (da < Real(std::max(1e4 * tol, 1e-8)) ||
                        (beta < Real(1.01) && 50 * (beta_cycle_start - beta) < beta - 1));
        if (stalled) {
            struct Probe {
                Real a, g, b, w;
                int s;
            };
            // Deep horizons near beta = 1 are wasted on probes: the clamped
            // folds settle far sooner than the worst-case contraction bound,
            // and the zero-entropy exit only needs beta at the floor's
            // resolution.
            long pcap = std::min<long>(horizon_cap, 200000);
            auto probe = [&](const Real& a) {
                Probe p;
                p.a = a;
                p.g = gamma_from(a, gamma, 8 * (a - alpha) + Real(itol), pcap);
                p.b = p.g - a + k - 1;
                Enclosure e = phi_inf_ab(a, p.b, su, tol / 8, pcap);
                p.w = boost::multiprecision::abs(e.mid() - a);
                p.s = e.lo - a > 0 ? 1 : (e.hi - a < 0 ? -1 : 0);
                return p;
            };
            Real upper = (k == 2 ? gamma : Real(1)) - Real(tol);
            Probe best = probe(alpha);
            Probe prev2 = best, prev = best;
            bool bracketed = false;
            Real bl = alpha, br = alpha;
            Real h = std::max(Real(1e-7), Real(4 * da));
            for (Real t = alpha + h; t < upper; t = alpha + (h *= 2)) {
                Probe p = probe(t);
                if (p.s >= 0 && p.b <= beta_floor) {
                    best = p;  // zero entropy at this resolution
                    break;
                }
                if (p.s < 0) {
                    Real lo2 = prev.a, hi2 = t;
                    best = prev;
                    while (hi2 - lo2 > tol) {
                        Probe q = probe((lo2 + hi2) / 2);
                        if (q.s == 0) {
                            best = q;
                            break;
                        }
                        if (q.s > 0) {
                            lo2 = q.a;
                            best = q;
                        } else {
                            hi2 = q.a;
                        }
                    }
                    break;
                }
                if (p.w > prev.w) {
                    bl = prev2.a;
                    br = t;
                    bracketed = true;
                    break;
                }
                prev2 = prev;
                prev = p;
                if (p.w < best.w) best = p;
            }
            if (bracketed) {
                Real L = bl, R = br;
                Real stop = Real(std::max(100 * tol, 1e-10));
                while (R - L > stop) {
                    Probe p1 = probe(L + (R - L) / 3);
                    Probe p2 = probe(R - (R - L) / 3);
                    if (p1.s >= 0 && p1.b <= beta_floor) {
                        best = p1;
                        break;
                    }
                    if (p1.w < p2.w) {
                        R = p2.a;
                        if (p1.w < best.w) best = p1;
                    } else {
                        L = p1.a;
                        if (p2.w < best.w) best = p2;
                    }
                }
            }
            if (best.a >= alpha) {
                alpha = best.a;
                gamma = best.g;
                beta = best.b;
                rep.trace.push_back({++step, alpha, beta, gamma, best.w});
            }
            converged = true;
        }
    }
    rep.max_iter_exceeded = !converged && beta > beta_floor;
    rep.alpha_bar = alpha;
    rep.beta_bar = beta;
    rep.gamma_bar = clamp01(gamma);
    rep.beta_bar_is_one = beta <= beta_floor;
    rep.entropy_log2 = rep.beta_bar_is_one ? Real(0) : log2r(beta);
    rep.residual_u = boost::multiprecision::abs(
        phi_inf_ab(alpha, beta, su, tol / 8, horizon_cap).mid() - alpha);
    rep.residual_v = boost::multiprecision::abs(
        phi_inf_ab(alpha, beta, sv, tol / 8, horizon_cap).mid() - rep.gamma_bar);
    return rep;
}

bool verify_uniqueness(const EPString& u, const EPString& v, const EntropyReport& report,
                       int probes, unsigned seed) {
    if (report.beta_bar <= 1) return true;
    int k = report.k;
    double tol = 1e-12;
    double accept = 1e-8;
    EPString su = u.shift(1), sv = v.shift(1);
    Real gamma = report.alpha_bar + report.beta_bar - k + 1;
    // The claimed solution itself must have a tiny defect.
    Real ru = boost::multiprecision::abs(
        phi_inf_ab(report.alpha_bar, report.beta_bar, su, tol, 100000).mid() - report.alpha_bar);
    Real rv = boost::multiprecision::abs(
        phi_inf_ab(report.alpha_bar, report.beta_bar, sv, tol, 100000).mid() - gamma);
    if (ru > accept || rv > accept) return false;

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    int done = 0;
    while (done < probes) {
        double a = dist(rng) * std::min(static_cast<double>(gamma), 0.999);
        if (std::abs(a - static_cast<double>(report.alpha_bar)) < 0.02) continue;
        Real alpha(a);
        Real beta = gamma - alpha + k - 1;
        if (beta <= 1.001) {
            ++done;
            continue;
        }
        Real r = boost::multiprecision::abs(phi_inf_ab(alpha, beta, su, tol, 100000).mid() - alpha);
        if (r < accept) return false;
        ++done;
    }
    return true;
}

std::string EntropyReport::to_json() const {
    nlohmann::json j;
    j["alpha_bar"] = static_cast<double>(alpha_bar);
    j["beta_bar"] = static_cast<double>(beta_bar);
    j["gamma_bar"] = static_cast<double>(gamma_bar);
    j["entropy_log2"] = static_cast<double>(entropy_log2);
    j["k"] = k;
    nlohmann::json flags = nlohmann::json::array();
    if (!special_case.empty()) flags.push_back(special_case);
    if (beta_bar_is_one) flags.push_back("beta_bar_is_one");
    if (k2_reversed) flags.push_back("k2_reversed");
    if (max_iter_exceeded) flags.push_back("max_iter_exceeded");
    j["flags"] = flags;
    j["trace"] = nlohmann::json::array();
    for (const TraceStep& t : trace)
        j["trace"].push_back({{"n", t.n},
                              {"alpha", static_cast<double>(t.alpha)},
                              {"beta", static_cast<double>(t.beta)},
                              {"gamma", static_cast<double>(t.gamma)},
                              {"residual", static_cast<double>(t.residual)}});
    return j.dump(2);
}

}  // namespace lexent
