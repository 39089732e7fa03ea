#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lexent/symbolic_strings.hpp"

using namespace lexent;

TEST_CASE("canonical form: minimal period") {
    EPString x({}, {0, 1, 0, 1}, 2);
    CHECK(x.per() == Word{0, 1});
    CHECK(x.pre().empty());
    EPString y({}, {1, 1, 1}, 2);
    CHECK(y.per() == Word{1});
}

TEST_CASE("canonical form: preperiod absorption") {
    // 1(10)^inf = (11 0 ...)? positions: 1,1,0,1,0,... = (1)(10)... absorb:
    // 1(10) == (11 0)? No: 1 1 0 1 0 1 0 -> equals (1)(10) with pre "1" and
    // the rotation (01) absorbed: 1(10) = (11,0,1,0,...) -> canonical "(1"+...
    EPString x({1}, {0, 1}, 2);
    // 1 0 1 0 1 ... = (10)^inf exactly.
    CHECK(x.pre().empty());
    CHECK(x.per() == Word{1, 0});

    EPString y({0, 1}, {1, 0}, 2);
    // 0 1 1 0 1 0 1 0... = 011(01)? positions: 0,1,1,0,1,0,... pre "01" per "10"
    // rotates to pre "0" per "11 0"? last of pre (1) == last of per (0)? no.
    CHECK(y.pre() == Word{0, 1});
    CHECK(y.per() == Word{1, 0});

    EPString z({0, 1, 1}, {1, 0, 1}, 2);
    // 0 1 1 (101)^inf: last pre symbol 1 == last per symbol 1, rotate:
    // 0 1 (110)^inf, again: 0 (111 0)? last pre 1 vs last per 0 -> stop? Check
    // by value: the infinite strings must agree.
    for (long i = 0; i < 24; ++i) CHECK(z.at(i) == EPString({0, 1, 1}, {1, 0, 1}, 2).at(i));
    CHECK(z.pre().size() <= 3);
}

TEST_CASE("shift and with_alphabet") {
    EPString x({0, 0}, {1, 1, 0}, 2);
    CHECK(x.shift(0) == x);
    CHECK(x.shift(1) == EPString({0}, {1, 1, 0}, 2));
    CHECK(x.shift(2) == EPString({}, {1, 1, 0}, 2));
    CHECK(x.shift(5) == EPString({}, {1, 1, 0}, 2));  // purely periodic from 2
    CHECK(x.shift(3) == EPString({}, {1, 0, 1}, 2));
    EPString w = x.with_alphabet(4);
    CHECK(w.alphabet() == 4);
    for (long i = 0; i < 10; ++i) CHECK(w.at(i) == x.at(i));
}

TEST_CASE("parse and render round trip") {
    CHECK(parse_epstring("(01)").str() == "(01)");
    CHECK(parse_epstring("001(10)").str() == "001(10)");
    CHECK(parse_epstring("(00110111)").per().size() == 8);
    EPString big = parse_epstring("(10,11,0)");
    CHECK(big.alphabet() == 12);
    CHECK(big.at(0) == 10);
    CHECK(big.at(1) == 11);
    CHECK(big.at(2) == 0);
    CHECK_THROWS_AS(parse_epstring("()"), EmptyPeriod);
    CHECK(parse_epstring("(0)", 3).alphabet() == 3);
}

TEST_CASE("lexicographic comparison basics") {
    auto P = [](const char* s) { return parse_epstring(s, 2); };
    CHECK(compare_lex(P("(0)"), P("(1)")) == Ordering::less);
    CHECK(compare_lex(P("(01)"), P("(01)")) == Ordering::equal);
    CHECK(compare_lex(P("(10)"), P("10(10)")) == Ordering::equal);  // same string
    CHECK(compare_lex(P("(10)"), P("1(10)")) == Ordering::less);    // 1010 < 1101
    CHECK(compare_lex(P("(01)"), P("(010011)")) == Ordering::greater);
    CHECK(compare_lex(P("(110)"), P("(1100)")) == Ordering::greater);
}

TEST_CASE("signed comparison flips after decreasing symbols") {
    // delta = (+,-): positions after an odd number of 1s compare reversed.
    SignVector delta{1, -1};
    auto P = [](const char* s) { return parse_epstring(s, 2); };
    // 10... vs 11...: first disagreement at position 1 after prefix "1" (one
    // decreasing symbol) -> 0 beats 1 reversed, so (10) > (11).
    CHECK(compare(P("(10)"), P("(1)"), delta) == Ordering::greater);
    CHECK(compare(P("(1)"), P("(10)"), delta) == Ordering::less);
    // Plain order agrees with compare under all-plus signs.
    CHECK(compare(P("(10)"), P("(1)"), all_plus(2)) == Ordering::less);
}

TEST_CASE("total order axioms on random triples") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> len(1, 5), bit(0, 1);
    auto rand_ep = [&]() {
        Word pre, per;
        int np = len(rng) - 1, nq = len(rng);
        for (int i = 0; i < np; ++i) pre.push_back(bit(rng));
        for (int i = 0; i < nq; ++i) per.push_back(bit(rng));
        return EPString(pre, per, 2);
    };
    auto as_int = [](Ordering o) { return o == Ordering::less ? -1 : o == Ordering::equal ? 0 : 1; };
    for (int trial = 0; trial < 1000; ++trial) {
        EPString a = rand_ep(), b = rand_ep(), c = rand_ep();
        int ab = as_int(compare_lex(a, b));
        int ba = as_int(compare_lex(b, a));
        CHECK(ab == -ba);  // antisymmetry
        CHECK(as_int(compare_lex(a, a)) == 0);  // reflexivity
        // equality is equivalence with canonical forms
        if (ab == 0) CHECK(a == b);
        // transitivity
        int bc = as_int(compare_lex(b, c));
        int ac = as_int(compare_lex(a, c));
        if (ab <= 0 && bc <= 0) CHECK(ac <= 0);
        if (ab >= 0 && bc >= 0) CHECK(ac >= 0);
    }
}

TEST_CASE("sup_shift") {
    auto P = [](const char* s) { return parse_epstring(s, 2); };
    CHECK(sup_shift(P("(01)")) == P("(10)"));
    CHECK(sup_shift(P("(00110111)")) == P("(11100110)"));
    CHECK(sup_shift(P("(0)")) == P("(0)"));
    // 01(10): shifts are 1(10), (10), (01), ...; the sup is 1(10) = 1101010...
    CHECK(sup_shift(P("01(10)")) == P("1(10)"));
}

TEST_CASE("condition reports") {
    auto P = [](const char* s) { return parse_epstring(s, 2); };
    ConditionReport good = check_conditions(P("(01)"), P("(110)"));
    CHECK(good.endpoints_ok);
    CHECK(good.weak_ok);
    CHECK(good.strict_ok);
    CHECK(good.k2_order_ok);

    ConditionReport weak_only = check_conditions(P("(0)"), P("(1)"));
    CHECK(weak_only.weak_ok);
    // sigma^n u = u attains the lower bound, sigma^n v = v the upper: strict
    // still holds (u < v is the only strictness needed between families).
    ConditionReport bad = check_conditions(P("(10)"), P("(110)"));
    CHECK_FALSE(bad.endpoints_ok);

    // v = sup-shift of u attains equality: weak holds, strict fails.
    ConditionReport at_sup = check_conditions(P("(00110111)"), P("(11100110)"));
    CHECK(at_sup.weak_ok);
    CHECK_FALSE(at_sup.strict_ok);
}

TEST_CASE("drop helpers") {
    Word w{1, 2, 3};
    CHECK(drop_last(w) == Word{1, 2});
    CHECK(drop_first(w) == Word{2, 3});
    CHECK_THROWS_AS(drop_last(Word{}), EmptyWord);
    CHECK_THROWS_AS(drop_first(Word{}), EmptyWord);
}
