#include "lexent/symbolic_strings.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lexent {

SignVector all_plus(int k) { return SignVector(static_cast<size_t>(k), 1); }

EPString::EPString(Word pre, Word per, int k) : pre_(std::move(pre)), per_(std::move(per)), k_(k) {
    if (per_.empty()) throw EmptyPeriod();
    for (Symbol s : pre_)
        if (s < 0 || s >= k_) throw AlphabetMismatch("symbol out of range for alphabet " + std::to_string(k_));
    for (Symbol s : per_)
        if (s < 0 || s >= k_) throw AlphabetMismatch("symbol out of range for alphabet " + std::to_string(k_));

    // Reduce the period to the minimal period of per^inf. Any period of a
    // periodic infinite string divides every other period, so it is enough to
    // try the divisors of |per|.
    size_t n = per_.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = per_[i] == per_[i % d];
        if (ok) {
            per_.resize(d);
            break;
        }
    }
    // Absorb the preperiod tail into the period: while the last preperiod
    // symbol equals the last period symbol, rotate the period right by one.
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_.pop_back();
        per_.insert(per_.begin(), pre_.back());
        pre_.pop_back();
    }
}

Word EPString::prefix(long n) const {
    Word w;
    w.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) w.push_back(at(i));
    return w;
}

EPString EPString::shift(long n) const {
    long p = static_cast<long>(pre_.size());
    if (n <= p) return EPString(Word(pre_.begin() + n, pre_.end()), per_, k_);
    long r = (n - p) % static_cast<long>(per_.size());
    Word rotated(per_.begin() + r, per_.end());
    rotated.insert(rotated.end(), per_.begin(), per_.begin() + r);
    return EPString({}, std::move(rotated), k_);
}

EPString EPString::with_alphabet(int k) const {
    return EPString(pre_, per_, k);
}

std::string EPString::str() const {
    return word_str(pre_, k_) + "(" + word_str(per_, k_) + ")";
}

std::string EPString::key() const {
    std::ostringstream os;
    os << k_ << ':';
    for (Symbol s : pre_) os << s << ',';
    os << '|';
    for (Symbol s : per_) os << s << ',';
    return os.str();
}

Word drop_last(const Word& w) {
    if (w.empty()) throw EmptyWord();
    return Word(w.begin(), w.end() - 1);
}

Word drop_first(const Word& w) {
    if (w.empty()) throw EmptyWord();
    return Word(w.begin() + 1, w.end());
}

Ordering compare(const EPString& x, const EPString& y, const SignVector& delta) {
    if (x.alphabet() != y.alphabet())
        throw AlphabetMismatch("comparing strings over different alphabets");
    long horizon = std::max(x.pre().size(), y.pre().size()) +
                   std::lcm(static_cast<long>(x.per().size()), static_cast<long>(y.per().size()));
    int sign = 1;
    for (long i = 0; i < horizon; ++i) {
        Symbol a = x.at(i), b = y.at(i);
        if (a != b) {
            bool less = a < b;
            if (sign < 0) less = !less;
            return less ? Ordering::less : Ordering::greater;
        }
        sign *= delta[static_cast<size_t>(a)];
    }
    return Ordering::equal;
}

Ordering compare_lex(const EPString& x, const EPString& y) {
    return compare(x, y, all_plus(x.alphabet()));
}

EPString sup_shift(const EPString& x) {
    EPString best = x;
    for (long n = 1; n < x.shift_bound(); ++n) {
        EPString s = x.shift(n);
        if (compare_lex(s, best) == Ordering::greater) best = s;
    }
    return best;
}

ConditionReport check_conditions(const EPString& u, const EPString& v) {
    if (u.alphabet() != v.alphabet())
        throw AlphabetMismatch("bounding strings over different alphabets");
    int k = u.alphabet();
    ConditionReport rep;
    rep.endpoints_ok = u.at(0) == 0 && v.at(0) == k - 1;
    if (!rep.endpoints_ok)
        rep.violation = "endpoint symbols: u must start with 0 and v with " + std::to_string(k - 1);

    bool weak = true, strict = true;
    auto note = [&](const std::string& msg) {
        if (rep.violation.empty()) rep.violation = msg;
    };
    for (long n = 0; n < u.shift_bound() && (weak || strict); ++n) {
        EPString s = u.shift(n);
        Ordering lo = compare_lex(u, s);
        Ordering hi = compare_lex(s, v);
        if (lo == Ordering::greater) {
            weak = strict = false;
            note("sigma^" + std::to_string(n) + " u < u");
        }
        if (hi == Ordering::greater) {
            weak = strict = false;
            note("sigma^" + std::to_string(n) + " u > v");
        } else if (hi == Ordering::equal && strict) {
            strict = false;
            note("sigma^" + std::to_string(n) + " u = v (strict form fails)");
        }
    }
    for (long n = 0; n < v.shift_bound() && (weak || strict); ++n) {
        EPString s = v.shift(n);
        Ordering lo = compare_lex(u, s);
        Ordering hi = compare_lex(s, v);
        if (hi == Ordering::greater) {
            weak = strict = false;
            note("sigma^" + std::to_string(n) + " v > v");
        }
        if (lo == Ordering::greater) {
            weak = strict = false;
            note("sigma^" + std::to_string(n) + " v < u");
        } else if (lo == Ordering::equal && strict) {
            strict = false;
            note("u = sigma^" + std::to_string(n) + " v (strict form fails)");
        }
    }
    rep.weak_ok = weak && rep.endpoints_ok;
    rep.strict_ok = strict && weak && rep.endpoints_ok;

    if (k == 2) {
        rep.k2_order_ok = compare_lex(u.shift(1), v.shift(1)) != Ordering::greater;
        if (!rep.k2_order_ok) note("k=2 requires sigma u <= sigma v");
    } else {
        rep.k2_order_ok = true;
    }
    return rep;
}

namespace {

Word parse_symbols(const std::string& text) {
    Word w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw BadParams("empty symbol in string literal");
            w.push_back(std::stoi(item));
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw BadParams(std::string("bad symbol character '") + c + "'");
            w.push_back(c - '0');
        }
    }
    return w;
}

}  // namespace

EPString parse_epstring(const std::string& text, int min_alphabet) {
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != text.size())
        throw BadParams("string literal must have the form PRE(PER): " + text);
    Word pre = parse_symbols(text.substr(0, open));
    Word per = parse_symbols(text.substr(open + 1, close - open - 1));
    if (per.empty()) throw EmptyPeriod();
    int k = min_alphabet;
    for (Symbol s : pre) k = std::max(k, s + 1);
    for (Symbol s : per) k = std::max(k, s + 1);
    return EPString(std::move(pre), std::move(per), std::max(k, 1));
}

std::string word_str(const Word& w, int k) {
    std::ostringstream os;
    bool commas = k > 10;
    for (size_t i = 0; i < w.size(); ++i) {
        if (commas && i) os << ',';
        os << w[i];
    }
    return os.str();
}

}  // namespace lexent
