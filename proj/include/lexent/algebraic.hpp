#pragma once

#include <memory>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lexent/errors.hpp"
#include "lexent/real.hpp"

namespace lexent {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A real algebraic number field Q(theta) where theta is the unique root of a
// monic irreducible polynomial inside the isolating interval [root_lo, root_hi].
struct NumberField {
    // Monic minimal polynomial x^d + coeff[d-1] x^(d-1) + ... + coeff[0].
    std::vector<Rational> coeff;
    Rational root_lo, root_hi;
    std::string name;

    int degree() const { return static_cast<int>(coeff.size()); }
    // Exact evaluation of the minimal polynomial at a rational point.
    Rational eval(const Rational& x) const;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// theta^2 = theta + 1, theta in [1,2]  (golden ratio).
FieldPtr golden_field();
// theta^3 = theta + 1, theta in [1,2]  (plastic number).
FieldPtr plastic_field();

// An element of Q or of a number field Q(theta), represented by the rational
// coefficient vector of its residue modulo the minimal polynomial. Zero tests
// are exact (irreducibility makes the representation faithful) and sign tests
// refine the isolating interval of theta until the sign is certain.
class FieldElem {
  public:
    FieldElem() : c_{Rational(0)} {}  // rational zero
    explicit FieldElem(Rational q) : c_{std::move(q)} {}
    explicit FieldElem(long n) : c_{Rational(n)} {}
    FieldElem(FieldPtr field, std::vector<Rational> coeffs);

    // The generator theta of the given field.
    static FieldElem theta(FieldPtr field);

    bool is_rational() const { return field_ == nullptr; }
    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;  // throws BadParams on zero

    bool is_zero() const;
    bool operator==(const FieldElem& o) const { return (*this - o).is_zero(); }

    // Exact sign: -1, 0, +1.
    int sign() const;

    // A rational enclosure of the value with width <= eps.
    std::pair<Rational, Rational> approx(const Rational& eps) const;

    Real to_real() const;

    std::string key() const;  // stable map key

  private:
    FieldPtr field_;  // null for plain rationals
    std::vector<Rational> c_;

    static void align(FieldElem& a, FieldElem& b);  // lift rationals into a common field
};

}  // namespace lexent
