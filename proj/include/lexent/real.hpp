#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace lexent {

// Arbitrary precision floating point; working precision is set globally at
// startup (see set_precision) because expanding orbits lose roughly
// log2(beta) bits per iteration step.
using Real = boost::multiprecision::mpfr_float;

// Set the default working precision in bits for newly created Real values.
inline void set_precision(unsigned bits) {
    // mpfr_float counts precision in decimal digits.
    unsigned digits = static_cast<unsigned>(bits * 0.30103) + 2;
    Real::default_precision(digits);
}

// Establish the documented 128-bit default before any Real is created; the
// CLI (and any embedder) may override it later via set_precision.
inline const bool default_precision_set = (set_precision(128), true);

inline Real log2r(const Real& x) {
    using boost::multiprecision::log;
    static const Real ln2 = log(Real(2));
    return log(x) / ln2;
}

// Global knobs with the documented defaults; CLI flags override them.
struct Config {
    unsigned precision_bits = 128;
    double tol = 1e-12;
    int max_iter = 200;
    long horizon_cap = 1000000;
    double singular_tol = 1e-30;
};

}  // namespace lexent
