// Command line frontend: kneading codings, entropy, follower graphs, the
// inverse decision procedure, and admissibility checks for bounded shifts.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexent/beta_alpha_maps.hpp"
#include "lexent/entropy_solver.hpp"
#include "lexent/follower_graph.hpp"
#include "lexent/inverse_solver.hpp"

using namespace lexent;

namespace {

// Accepts "golden", "plastic", "p/q", decimal literals, and integers; all are
// carried exactly (decimals as exact rationals).
FieldElem parse_param(const std::string& text) {
    if (text == "golden") return FieldElem::theta(golden_field());
    if (text == "plastic") return FieldElem::theta(plastic_field());
    auto bad = [&] { return BadParams("cannot parse parameter '" + text + "'"); };
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty() ||
            num.find_first_not_of("0123456789") != std::string::npos ||
            den.find_first_not_of("0123456789") != std::string::npos)
            throw bad();
        auto strip = [](std::string& t) {
            auto nz = t.find_first_not_of('0');
            t = nz == std::string::npos ? "0" : t.substr(nz);
        };
        strip(num);
        strip(den);
        Rational q{BigInt(num), BigInt(den)};
        return FieldElem(neg ? -q : q);
    }
    auto dot = s.find('.');
    std::string digits = dot == std::string::npos ? s : s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw bad();
    // Leading zeros would make the big-integer parser read the string as octal.
    auto nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    BigInt den(1);
    if (dot != std::string::npos)
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    Rational q{BigInt(digits), den};
    return FieldElem(neg ? -q : q);
}

AlphaBetaParams make_params(const std::string& alpha_text, const std::string& beta_text) {
    FieldElem a = parse_param(alpha_text), b = parse_param(beta_text);
    // Decimal literals are numerical approximations: route them through the
    // floating orbit with its breakpoint-landing tolerance. Rationals, integers
    // and named constants stay exact.
    bool approximate = alpha_text.find('.') != std::string::npos ||
                       beta_text.find('.') != std::string::npos;
    if (!approximate) {
        try {
            return AlphaBetaParams(a, b);
        } catch (const BadParams&) {
            // Incompatible exact fields: fall back to floating point.
        }
    }
    return AlphaBetaParams(a.to_real(), b.to_real());
}

std::string coding_text(const Coding& c, int k) {
    if (c.closed) {
        std::string s = c.ep->str() + (c.assumed_hit ? "  [periodic within tolerance]"
                                                     : "  [exact]");
        return s;
    }
    return word_str(c.prefix, k) + "...  [no closure found]";
}

int exit_code_of(Verdict v) {
    switch (v) {
        case Verdict::matched: return 0;
        case Verdict::not_representable: return 3;
        case Verdict::undetermined: return 4;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropy and kneading-data tools for lexicographically bounded shifts"};
    app.require_subcommand(1);

    Config cfg;
    bool json_out = false;
    app.add_option("--precision", cfg.precision_bits, "working precision in bits")
        ->check(CLI::Range(64u, 100000u));
    app.add_option("--tol", cfg.tol, "solver tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-iter", cfg.max_iter, "maximum alternating iterations")
        ->check(CLI::PositiveNumber);
    app.add_option("--horizon-cap", cfg.horizon_cap, "evaluation horizon cap");
    app.add_flag("--json", json_out, "emit JSON instead of text");

    std::string alpha_text = "0", beta_text = "2", u_text, v_text;
    int len = 32, K = 4;
    std::string mode_text = "collapse", format_text = "dot";
    double hit_tol = 1e-9;

    CLI::App* c_code = app.add_subcommand("code", "kneading codings of beta*x + alpha mod 1");
    c_code->add_option("--alpha", alpha_text, "alpha (decimal, p/q, golden, plastic)")
        ->required();
    c_code->add_option("--beta", beta_text, "beta (same grammar)")->required();
    c_code->add_option("--len", len, "number of symbols to generate");
    c_code->add_option("--hit-tol", hit_tol, "breakpoint-landing tolerance (floating params)");

    CLI::App* c_entropy = app.add_subcommand("entropy", "topological entropy of Sigma(u, v)");
    c_entropy->add_option("--u", u_text, "lower bound, PRE(PER) grammar")->required();
    c_entropy->add_option("--v", v_text, "upper bound, PRE(PER) grammar")->required();

    CLI::App* c_graph = app.add_subcommand("graph", "follower graph of Sigma(u, v)");
    c_graph->add_option("--u", u_text)->required();
    c_graph->add_option("--v", v_text)->required();
    c_graph->add_option("--mode", mode_text)->check(CLI::IsMember({"collapse", "truncate"}));
    c_graph->add_option("--K", K, "truncation level (truncate mode)");
    c_graph->add_option("--format", format_text)->check(CLI::IsMember({"dot", "json"}));

    CLI::App* c_invert = app.add_subcommand(
        "invert", "decide whether (u, v) is the kneading pair of some beta*x + alpha mod 1");
    c_invert->add_option("--u", u_text)->required();
    c_invert->add_option("--v", v_text)->required();

    CLI::App* c_check = app.add_subcommand("check", "admissibility conditions for (u, v)");
    c_check->add_option("--u", u_text)->required();
    c_check->add_option("--v", v_text)->required();

    // Let global flags (--json, --tol, ...) appear after the subcommand name.
    for (CLI::App* sc : {c_code, c_entropy, c_graph, c_invert, c_check}) sc->fallthrough();

    CLI11_PARSE(app, argc, argv);
    set_precision(cfg.precision_bits);

    try {
        if (c_code->parsed()) {
            AlphaBetaParams p = make_params(alpha_text, beta_text);
            KneadingPair kp = orbit_codings(p, len, hit_tol);
            if (json_out) {
                nlohmann::json j;
                j["k"] = kp.k;
                j["u"] = kp.u.closed ? kp.u.ep->str() : word_str(kp.u.prefix, kp.k);
                j["v"] = kp.v.closed ? kp.v.ep->str() : word_str(kp.v.prefix, kp.k);
                j["u_exact"] = kp.u.closed && !kp.u.assumed_hit;
                j["v_exact"] = kp.v.closed && !kp.v.assumed_hit;
                j["u_periodic"] = kp.u.closed;
                j["v_periodic"] = kp.v.closed;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "k = " << kp.k << "\n"
                          << "u = " << coding_text(kp.u, kp.k) << "\n"
                          << "v = " << coding_text(kp.v, kp.k) << "\n";
            }
            return 0;
        }
        if (c_entropy->parsed()) {
            EPString u = parse_epstring(u_text), v0 = parse_epstring(v_text);
            int k = std::max(u.alphabet(), v0.alphabet());
            EntropyReport rep = compute_bar(u.with_alphabet(k), v0.with_alphabet(k), cfg.tol,
                                            cfg.max_iter, cfg.horizon_cap);
            if (json_out) {
                std::cout << rep.to_json() << "\n";
            } else {
                std::cout.precision(15);
                std::cout << "alpha_bar = " << static_cast<double>(rep.alpha_bar) << "\n"
                          << "beta_bar  = " << static_cast<double>(rep.beta_bar) << "\n"
                          << "gamma_bar = " << static_cast<double>(rep.gamma_bar) << "\n"
                          << "entropy   = " << static_cast<double>(rep.entropy_log2)
                          << "  (log2)\n";
                if (!rep.special_case.empty())
                    std::cout << "special case: " << rep.special_case << "\n";
                if (rep.max_iter_exceeded) std::cout << "warning: max iterations exceeded\n";
            }
            return 0;
        }
        if (c_graph->parsed()) {
            EPString u = parse_epstring(u_text), v0 = parse_epstring(v_text);
            int k = std::max(u.alphabet(), v0.alphabet());
            GraphMode mode = mode_text == "collapse" ? GraphMode::collapse : GraphMode::truncate;
            FollowerGraph g = build_graph(u.with_alphabet(k), v0.with_alphabet(k), mode, K);
            std::cout << (format_text == "json" ? g.to_json() : g.to_dot()) << "\n";
            return 0;
        }
        if (c_invert->parsed()) {
            EPString u = parse_epstring(u_text), v0 = parse_epstring(v_text);
            int k = std::max(u.alphabet(), v0.alphabet());
            InverseDecision d = decide(u.with_alphabet(k), v0.with_alphabet(k), cfg.tol);
            if (json_out) {
                std::cout << d.to_json() << "\n";
            } else {
                const char* names[] = {"matched", "not_representable", "undetermined"};
                std::cout.precision(15);
                std::cout << "verdict: " << names[static_cast<int>(d.verdict)] << "\n"
                          << "alpha_bar = " << static_cast<double>(d.alpha_bar) << "\n"
                          << "beta_bar  = " << static_cast<double>(d.beta_bar) << "\n"
                          << "beta_hat  = " << static_cast<double>(d.beta_hat_value) << "\n";
                if (!d.notes.empty()) std::cout << "notes: " << d.notes << "\n";
            }
            return exit_code_of(d.verdict);
        }
        if (c_check->parsed()) {
            EPString u = parse_epstring(u_text), v0 = parse_epstring(v_text);
            int k = std::max(u.alphabet(), v0.alphabet());
            ConditionReport cr = check_conditions(u.with_alphabet(k), v0.with_alphabet(k));
            if (json_out) {
                nlohmann::json j;
                j["weak_ok"] = cr.weak_ok;
                j["strict_ok"] = cr.strict_ok;
                j["endpoints_ok"] = cr.endpoints_ok;
                j["k2_order_ok"] = cr.k2_order_ok;
                if (!cr.violation.empty()) j["violation"] = cr.violation;
                std::cout << j.dump(2) << "\n";
            } else {
                auto yn = [](bool b) { return b ? "yes" : "no"; };
                std::cout << "endpoints (u starts 0, v starts k-1): " << yn(cr.endpoints_ok)
                          << "\n"
                          << "weak inequalities:   " << yn(cr.weak_ok) << "\n"
                          << "strict inequalities: " << yn(cr.strict_ok) << "\n"
                          << "k=2 shift order:     " << yn(cr.k2_order_ok) << "\n";
                if (!cr.violation.empty()) std::cout << "violation: " << cr.violation << "\n";
            }
            return cr.endpoints_ok && cr.weak_ok ? 0 : 2;
        }
    } catch (const ConditionViolation& e) {
        std::cerr << "condition violation: " << e.what() << "\n";
        return 2;
    } catch (const BadParams& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
