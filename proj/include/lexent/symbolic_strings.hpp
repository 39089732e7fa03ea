#pragma once

#include <string>
#include <vector>

#include "lexent/errors.hpp"

namespace lexent {

// A symbol is an integer in [0, k) for the alphabet size k of the context.
using Symbol = int;

// A finite (possibly empty) string of symbols.
using Word = std::vector<Symbol>;

// One sign (+1 / -1) per alphabet symbol; +1 marks an increasing branch.
// The all-plus vector gives plain lexicographic order.
using SignVector = std::vector<int>;

enum class Ordering { less, equal, greater };

SignVector all_plus(int k);

// Eventually periodic infinite string pre . per^inf over alphabet {0,...,k-1}.
// Always stored in canonical form: the period word is the minimal period of
// its own infinite repetition and the preperiod is as short as possible.
class EPString {
  public:
    // Canonicalizes on construction. Throws EmptyPeriod / AlphabetMismatch.
    EPString(Word pre, Word per, int k);

    // Purely periodic convenience constructor.
    static EPString periodic(Word per, int k) { return EPString({}, std::move(per), k); }
    // The constant string s^inf.
    static EPString constant(Symbol s, int k) { return EPString({}, {s}, k); }

    const Word& pre() const { return pre_; }
    const Word& per() const { return per_; }
    int alphabet() const { return k_; }

    // Symbol at position i >= 0 of the infinite string.
    Symbol at(long i) const {
        if (i < static_cast<long>(pre_.size())) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    // First n symbols as a finite word.
    Word prefix(long n) const;

    // Number of positions after which shifts repeat: |pre| + |per|.
    long shift_bound() const { return static_cast<long>(pre_.size() + per_.size()); }

    // Exact sigma^n in canonical form.
    EPString shift(long n = 1) const;

    // Same infinite string re-read over a (not smaller) alphabet.
    EPString with_alphabet(int k) const;

    bool operator==(const EPString& o) const {
        return k_ == o.k_ && pre_ == o.pre_ && per_ == o.per_;
    }
    bool operator!=(const EPString& o) const { return !(*this == o); }

    // Renders as PRE(PER): digits when k <= 10, else comma separated.
    std::string str() const;

    // Stable key usable in hash maps (includes the alphabet size).
    std::string key() const;

  private:
    Word pre_, per_;
    int k_;
};

// w without its last symbol. Throws EmptyWord.
Word drop_last(const Word& w);
// w without its first symbol. Throws EmptyWord.
Word drop_first(const Word& w);

// Order with respect to the sign vector delta: the first disagreeing position
// decides, with the decision flipped when the preceding prefix has an odd
// number of decreasing symbols. Exact: the first disagreement of distinct
// strings occurs within max(|pre|) + lcm(|per|) positions.
Ordering compare(const EPString& x, const EPString& y, const SignVector& delta);

// Lexicographic comparison (all-plus signs).
Ordering compare_lex(const EPString& x, const EPString& y);

// Lexicographic supremum over all shifts sigma^n x, n >= 0.
EPString sup_shift(const EPString& x);

// Admissibility report for a bounding pair (u, v) in lexicographic order.
struct ConditionReport {
    bool weak_ok = false;       // u <= sigma^n u <= v and u <= sigma^n v <= v for all n
    bool strict_ok = false;     // u <= sigma^n u < v and u < sigma^n v <= v for all n
    bool endpoints_ok = false;  // u starts with 0 and v starts with k-1
    bool k2_order_ok = false;   // for k = 2: sigma u <= sigma v (vacuously true otherwise)
    std::string violation;      // human-readable first failure, empty if none
};

ConditionReport check_conditions(const EPString& u, const EPString& v);

// Parses the PRE(PER) grammar, e.g. "001(10)", "(00110111)", "(10,11,0)".
// The alphabet size is max symbol + 1 unless a larger k is forced.
EPString parse_epstring(const std::string& text, int min_alphabet = 0);

std::string word_str(const Word& w, int k);

}  // namespace lexent
