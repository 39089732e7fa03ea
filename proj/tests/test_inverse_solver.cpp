#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lexent/beta_alpha_maps.hpp"
#include "lexent/follower_graph.hpp"
#include "lexent/inverse_solver.hpp"

using namespace lexent;

namespace {

// Decision for the boundary codings generated by exact parameters.
InverseDecision round_trip(const AlphaBetaParams& p) {
    KneadingPair kp = orbit_codings(p, 32);
    REQUIRE(kp.u.closed);
    REQUIRE(kp.v.closed);
    return decide(*kp.u.ep, *kp.v.ep);
}

}  // namespace

TEST_CASE("auxiliary growth rate of (u, sup-shift)") {
    BetaHatResult z = beta_hat(EPString::constant(0, 2));
    CHECK(static_cast<double>(z.value) == 0.0);
    CHECK(z.u_hat == EPString::constant(0, 2));

    // (01): the sup shift is (10) and the two-orbit system carries no growth.
    BetaHatResult g = beta_hat(parse_epstring("(01)"));
    CHECK(static_cast<double>(g.value) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(g.u_hat == parse_epstring("(10)"));

    // (00110111): the auxiliary pair grows at the real root of x^3 - x - 1.
    BetaHatResult p = beta_hat(parse_epstring("(00110111)"));
    CHECK(std::abs(static_cast<double>(p.value) - 1.3247179572447460) < 1e-9);
    CHECK(p.u_hat == parse_epstring("(11100110)"));

    // The growth agrees with the graph route on the same pair.
    Real hg = graph_entropy(
        build_graph(parse_epstring("(00110111)"), parse_epstring("(11100110)"),
                    GraphMode::collapse),
        1e-9);
    CHECK(boost::multiprecision::abs(log2r(p.value) - hg) < Real(1e-6));

    // Preconditions: u starts with 0 and is minimal among its shifts.
    CHECK_THROWS_AS(beta_hat(parse_epstring("(10)")), ConditionViolation);
    CHECK_THROWS_AS(beta_hat(parse_epstring("(010)")), ConditionViolation);
}

TEST_CASE("round trip: full shift parameters") {
    AlphaBetaParams p(FieldElem{Rational(0)}, FieldElem{Rational(2)});
    InverseDecision d = round_trip(p);
    CHECK(d.verdict == Verdict::matched);
    CHECK(d.decision_case == DecisionCase::T41_case1);
    CHECK(boost::multiprecision::abs(d.beta_bar - 2) < Real(1e-9));
    CHECK(boost::multiprecision::abs(d.alpha_bar) < Real(1e-9));
}

TEST_CASE("round trip: golden parameters") {
    AlphaBetaParams p(FieldElem{Rational(0)}, FieldElem::theta(golden_field()));
    InverseDecision d = round_trip(p);
    CHECK(d.verdict == Verdict::matched);
    CHECK(boost::multiprecision::abs(d.beta_bar - p.beta) < Real(1e-9));
    CHECK(boost::multiprecision::abs(d.alpha_bar) < Real(1e-9));
}

TEST_CASE("round trip: plastic parameters") {
    FieldElem beta = FieldElem::theta(plastic_field());
    FieldElem alpha = (FieldElem{Rational(1)} + beta).inverse();
    AlphaBetaParams p(alpha, beta);
    KneadingPair kp = orbit_codings(p, 32);
    REQUIRE(kp.u.closed);
    REQUIRE(kp.v.closed);
    CHECK(*kp.u.ep == parse_epstring("(01)"));
    CHECK(*kp.v.ep == parse_epstring("(110)"));
    InverseDecision d = decide(*kp.u.ep, *kp.v.ep);
    CHECK(d.verdict == Verdict::matched);
    CHECK(d.decision_case == DecisionCase::T41_case1);
    CHECK(boost::multiprecision::abs(d.alpha_bar - p.alpha) < Real(1e-9));
    CHECK(boost::multiprecision::abs(d.beta_bar - p.beta) < Real(1e-9));
}

TEST_CASE("boundary pairs are rejected") {
    // The merged periodic pair: equal growth with both regenerated codings
    // periodic and different from the input.
    InverseDecision d =
        decide(parse_epstring("(00110111)"), parse_epstring("(11100110)"));
    CHECK(d.verdict == Verdict::not_representable);
    CHECK(d.decision_case == DecisionCase::T41_case3);
    CHECK(d.coding_u == "(01)");
    CHECK(d.coding_v == "(110)");
    CHECK(d.coding_u_periodic);
    CHECK(d.coding_v_periodic);

    // Upper string strictly between the attainable codings: the dual-side
    // growth screen routes this to the equal-growth analysis.
    InverseDecision e = decide(parse_epstring("(0)", 2), parse_epstring("11(0)"));
    CHECK(e.verdict == Verdict::not_representable);
    CHECK(e.decision_case == DecisionCase::T41_case3);
    CHECK(e.coding_v == "(10)");

    // The preperiodic boundary expansions of the plastic parameters.
    InverseDecision f = decide(parse_epstring("00(110)"), parse_epstring("111(01)"));
    CHECK(f.verdict == Verdict::not_representable);
}

TEST_CASE("zero growth stays undetermined") {
    InverseDecision d = decide(parse_epstring("(0011)"), parse_epstring("(1100)"));
    CHECK(d.verdict == Verdict::undetermined);
    CHECK(d.notes.find("growth rate at 1") != std::string::npos);
}

TEST_CASE("inadmissible pairs are rejected up front") {
    CHECK_THROWS_AS(decide(parse_epstring("(10)"), parse_epstring("(110)")),
                    ConditionViolation);
    CHECK_THROWS_AS(decide(parse_epstring("(0)", 2), parse_epstring("0(1)")),
                    ConditionViolation);
}

TEST_CASE("boundary residual certificates") {
    FieldElem beta = FieldElem::theta(plastic_field());
    FieldElem alpha = (FieldElem{Rational(1)} + beta).inverse();
    Real a = alpha.to_real(), b = beta.to_real();

    // At the true parameters the codings keep a visible margin: no shift of u
    // reaches 1 and no shift of v reaches 0.
    ResidualRecord r =
        kneading_residuals(parse_epstring("(01)"), parse_epstring("(110)"), a, b);
    CHECK(r.u_values.size() == 2);
    CHECK(r.v_values.size() == 3);
    CHECK(r.u_gap_from_one > Real(0.2));
    CHECK(r.v_gap_from_zero > Real(0.1));

    // The merged boundary pair saturates: a shift of u attains the upper
    // endpoint at the same parameters.
    ResidualRecord s = kneading_residuals(parse_epstring("(00110111)"),
                                          parse_epstring("(11100110)"), a, b);
    CHECK(s.u_gap_from_one < Real(1e-9));

    CHECK_THROWS_AS(kneading_residuals(parse_epstring("(01)"), parse_epstring("(110)"),
                                       Real(0.5), Real(0.9)),
                    BadParams);
}

TEST_CASE("decision serializes with the documented fields") {
    InverseDecision d = decide(parse_epstring("(0)", 2), parse_epstring("(10)"));
    std::string j = d.to_json();
    for (const char* field : {"verdict", "case", "alpha_bar", "beta_bar", "beta_hat",
                              "u_hat", "coding_u", "coding_v"})
        CHECK(j.find(field) != std::string::npos);
    CHECK(j.find("\"matched\"") != std::string::npos);
    CHECK(j.find("\"entropy_gap\"") != std::string::npos);

    InverseDecision n =
        decide(parse_epstring("(00110111)"), parse_epstring("(11100110)"));
    std::string jn = n.to_json();
    CHECK(jn.find("\"not_representable\"") != std::string::npos);
    CHECK(jn.find("\"equal_growth_periodic\"") != std::string::npos);
}
