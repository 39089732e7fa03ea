#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "lexent/entropy_solver.hpp"
#include "lexent/follower_graph.hpp"

using namespace lexent;
using lexent::testing::admissible_corpus;

namespace {

// Independent root oracle: bisection on a polynomial given by coefficients
// (low to high), on a bracket with a sign change.
double poly_root(const std::vector<double>& c, double lo, double hi) {
    auto eval = [&](double x) {
        double v = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        double mid = (lo + hi) / 2;
        if ((eval(mid) > 0) == (eval(hi) > 0))
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

// The corpus solves are shared across test cases; the boundary pairs are the
// costly ones, so compute each report once.
const std::vector<EntropyReport>& corpus_reports() {
    static const std::vector<EntropyReport> reps = [] {
        std::vector<EntropyReport> r;
        for (const auto& e : admissible_corpus()) r.push_back(compute_bar(e.u, e.v));
        return r;
    }();
    return reps;
}

}  // namespace

TEST_CASE("plastic pair: parameters match the cubic root") {
    EntropyReport rep = compute_bar(parse_epstring("(01)"), parse_epstring("(110)"));
    double beta_ref = poly_root({-1, -1, 0, 1}, 1.0, 2.0);  // x^3 - x - 1
    CHECK(std::abs(static_cast<double>(rep.beta_bar) - beta_ref) < 1e-9);
    CHECK(std::abs(static_cast<double>(rep.alpha_bar) - 1 / (1 + beta_ref)) < 1e-9);
    CHECK(std::abs(static_cast<double>(rep.entropy_log2) - std::log2(beta_ref)) < 1e-9);
    CHECK(rep.k == 2);
    CHECK(rep.special_case.empty());
    CHECK_FALSE(rep.max_iter_exceeded);
    // gamma is derived consistently and beta * gamma = 1 for this system.
    CHECK(std::abs(static_cast<double>(rep.gamma_bar * rep.beta_bar) - 1) < 1e-8);
}

TEST_CASE("golden pair and full shifts") {
    EntropyReport g = compute_bar(parse_epstring("(0)", 2), parse_epstring("(10)"));
    double phi = poly_root({-1, -1, 1}, 1.0, 2.0);  // x^2 - x - 1
    CHECK(std::abs(static_cast<double>(g.beta_bar) - phi) < 1e-9);
    CHECK(std::abs(static_cast<double>(g.alpha_bar)) < 1e-9);

    for (int k = 2; k <= 5; ++k) {
        EntropyReport f = compute_bar(EPString::constant(0, k), EPString::constant(k - 1, k));
        CHECK(std::abs(static_cast<double>(f.beta_bar) - k) < 1e-9);
        CHECK(std::abs(static_cast<double>(f.alpha_bar)) < 1e-9);
        CHECK(std::abs(static_cast<double>(f.entropy_log2) - std::log2(k)) < 1e-9);
    }
}

TEST_CASE("degenerate and special cases") {
    // k = 2 with sigma v before sigma u: zero entropy short-circuit.
    EntropyReport r = compute_bar(parse_epstring("(01)"), parse_epstring("(10)"));
    CHECK(r.k2_reversed);
    CHECK(r.beta_bar_is_one);
    CHECK(static_cast<double>(r.entropy_log2) == 0.0);

    // sigma v = 0^inf: (alpha, beta) = (0, k-1).
    EntropyReport z = compute_bar(parse_epstring("(0)", 2), parse_epstring("1(0)"));
    CHECK(z.special_case == "sigma_v_zero");
    CHECK(static_cast<double>(z.alpha_bar) == 0.0);
    CHECK(static_cast<double>(z.beta_bar) == 1.0);
    CHECK(static_cast<double>(z.entropy_log2) == 0.0);

    EPString z3u = EPString::constant(0, 3), z3v = EPString({2}, {0}, 3);
    EntropyReport z3 = compute_bar(z3u, z3v);
    CHECK(z3.special_case == "sigma_v_zero");
    CHECK(static_cast<double>(z3.beta_bar) == 2.0);

    // sigma u = (k-1)^inf: (alpha, beta) = (1, k).
    EntropyReport t = compute_bar(parse_epstring("0(1)"), parse_epstring("(1)"));
    CHECK(t.special_case == "sigma_u_top");
    CHECK(static_cast<double>(t.alpha_bar) == 1.0);
    CHECK(static_cast<double>(t.beta_bar) == 2.0);

    // Violated conditions are rejected.
    CHECK_THROWS_AS(compute_bar(parse_epstring("(10)"), parse_epstring("(110)")),
                    ConditionViolation);
}

TEST_CASE("iteration trace is monotone") {
    auto corpus = admissible_corpus();
    for (size_t i = 0; i < corpus.size(); ++i) {
        INFO("pair: " << corpus[i].name);
        const EntropyReport& rep = corpus_reports()[i];
        if (!rep.special_case.empty()) continue;
        for (size_t t = 2; t < rep.trace.size(); ++t) {
            CHECK(rep.trace[t].alpha >= rep.trace[t - 1].alpha - Real(1e-11));
            CHECK(rep.trace[t].beta <= rep.trace[t - 1].beta + Real(1e-11));
        }
    }
}

TEST_CASE("fixed-point residuals at termination") {
    auto corpus = admissible_corpus();
    for (size_t i = 0; i < corpus.size(); ++i) {
        INFO("pair: " << corpus[i].name);
        const EntropyReport& rep = corpus_reports()[i];
        if (rep.beta_bar_is_one) continue;
        CHECK(rep.residual_u <= Real(4e-12));
        CHECK(rep.residual_v <= Real(4e-12));
    }
}

TEST_CASE("two entropy routes agree on the corpus") {
    auto corpus = admissible_corpus();
    for (size_t i = 0; i < corpus.size(); ++i) {
        INFO("pair: " << corpus[i].name);
        const EntropyReport& rep = corpus_reports()[i];
        Real hg = graph_entropy(build_graph(corpus[i].u, corpus[i].v, GraphMode::collapse), 1e-9);
        CHECK(boost::multiprecision::abs(rep.entropy_log2 - hg) < Real(1e-6));
    }
}

TEST_CASE("monotonicity in the bounding data") {
    // u within u', v' within v shrinks the shift space: beta decreases and
    // alpha increases. Checked over every comparable ordered pair of corpus
    // entries on a common alphabet.
    auto corpus = admissible_corpus();
    const std::vector<EntropyReport>& reps = corpus_reports();
    int combos = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        for (size_t j = 0; j < corpus.size(); ++j) {
            if (i == j || corpus[i].u.alphabet() != corpus[j].u.alphabet()) continue;
            bool u_ordered = compare_lex(corpus[i].u, corpus[j].u) != Ordering::greater;
            bool v_ordered = compare_lex(corpus[j].v, corpus[i].v) != Ordering::greater;
            if (!u_ordered || !v_ordered) continue;
            ++combos;
            INFO("pair: " << corpus[i].name << " vs " << corpus[j].name);
            CHECK(reps[j].beta_bar <= reps[i].beta_bar + Real(1e-10));
            CHECK(reps[j].alpha_bar >= reps[i].alpha_bar - Real(1e-10));
        }
    }
    CHECK(combos >= 20);
}

TEST_CASE("uniqueness probes") {
    EntropyReport rep = compute_bar(parse_epstring("(01)"), parse_epstring("(110)"));
    CHECK(verify_uniqueness(parse_epstring("(01)"), parse_epstring("(110)"), rep));

    EntropyReport full = compute_bar(parse_epstring("(0)", 2), parse_epstring("(1)"));
    CHECK(verify_uniqueness(parse_epstring("(0)", 2), parse_epstring("(1)"), full));

    EntropyReport wrong = rep;
    wrong.beta_bar += Real(0.01);
    wrong.alpha_bar -= Real(0.01);
    CHECK_FALSE(verify_uniqueness(parse_epstring("(01)"), parse_epstring("(110)"), wrong));
}

TEST_CASE("report serializes with the documented fields") {
    EntropyReport rep = compute_bar(parse_epstring("(01)"), parse_epstring("(110)"));
    std::string j = rep.to_json();
    for (const char* field : {"alpha_bar", "beta_bar", "gamma_bar", "entropy_log2", "k",
                              "flags", "trace", "residual"})
        CHECK(j.find(field) != std::string::npos);
}
