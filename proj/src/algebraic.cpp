#include "lexent/algebraic.hpp"

#include <algorithm>
#include <sstream>

namespace lexent {

namespace {

using Poly = std::vector<Rational>;  // coefficient list, index = power

int degree_of(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree_of(p) + 1)); }

Poly p_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly p_sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Division with remainder; divisor must be nonzero.
std::pair<Poly, Poly> p_divmod(Poly a, const Poly& b) {
    int db = degree_of(b);
    Poly q;
    int da = degree_of(a);
    if (da < db) return {q, a};
    q.assign(static_cast<size_t>(da - db + 1), Rational(0));
    while ((da = degree_of(a)) >= db) {
        Rational f = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
        q[static_cast<size_t>(da - db)] = f;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(da - db + i)] -= f * b[static_cast<size_t>(i)];
    }
    trim(a);
    return {q, a};
}

// Reduce a polynomial in theta modulo the monic minimal polynomial.
std::vector<Rational> reduce(const Poly& p, const NumberField& F) {
    int d = F.degree();
    Poly r = p;
    for (int i = degree_of(r); i >= d; i = degree_of(r)) {
        Rational lead = r[static_cast<size_t>(i)];
        r[static_cast<size_t>(i)] = 0;
        // theta^i = -(coeff[d-1] theta^(i-1) + ... + coeff[0] theta^(i-d))
        for (int j = 0; j < d; ++j)
            r[static_cast<size_t>(i - d + j)] -= lead * F.coeff[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(d), Rational(0));
    return r;
}

Poly minpoly_as_poly(const NumberField& F) {
    Poly m = F.coeff;
    m.push_back(Rational(1));
    return m;
}

struct RatInterval {
    Rational lo, hi;
};

RatInterval imul(const RatInterval& a, const RatInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Interval Horner evaluation of the coefficient vector at theta in [lo, hi].
RatInterval eval_interval(const std::vector<Rational>& c, const RatInterval& t) {
    RatInterval acc{Rational(0), Rational(0)};
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        acc = imul(acc, t);
        acc.lo += c[static_cast<size_t>(i)];
        acc.hi += c[static_cast<size_t>(i)];
    }
    return acc;
}

int rat_sign(const Rational& q) { return q == 0 ? 0 : (q < 0 ? -1 : 1); }

// Halve the isolating interval of the field generator once.
void refine_root(const NumberField& F, RatInterval& iv) {
    Rational mid = (iv.lo + iv.hi) / 2;
    Rational pm = F.eval(mid);
    if (pm == 0) throw BadParams("minimal polynomial has a rational root: not irreducible");
    if (rat_sign(pm) == rat_sign(F.eval(iv.lo)))
        iv.lo = mid;
    else
        iv.hi = mid;
}

}  // namespace

Rational NumberField::eval(const Rational& x) const {
    Rational acc(1);  // monic leading term
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + coeff[static_cast<size_t>(i)];
    return acc;
}

FieldPtr golden_field() {
    static FieldPtr f = std::make_shared<NumberField>(
        NumberField{{Rational(-1), Rational(-1)}, Rational(1), Rational(2), "golden"});
    return f;
}

FieldPtr plastic_field() {
    static FieldPtr f = std::make_shared<NumberField>(
        NumberField{{Rational(-1), Rational(-1), Rational(0)}, Rational(1), Rational(2), "plastic"});
    return f;
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    if (field_) c_.resize(static_cast<size_t>(field_->degree()), Rational(0));
}

FieldElem FieldElem::theta(FieldPtr field) {
    std::vector<Rational> c(static_cast<size_t>(field->degree()), Rational(0));
    c[1] = 1;
    return FieldElem(std::move(field), std::move(c));
}

void FieldElem::align(FieldElem& a, FieldElem& b) {
    if (a.field_ == b.field_) return;
    if (a.is_rational()) {
        Rational q = a.c_[0];
        a.field_ = b.field_;
        a.c_.assign(static_cast<size_t>(b.field_->degree()), Rational(0));
        a.c_[0] = q;
    } else if (b.is_rational()) {
        Rational q = b.c_[0];
        b.field_ = a.field_;
        b.c_.assign(static_cast<size_t>(a.field_->degree()), Rational(0));
        b.c_[0] = q;
    } else {
        throw BadParams("cannot combine elements of different number fields exactly");
    }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    align(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    align(a, b);
    if (a.is_rational()) return FieldElem(a.c_[0] * b.c_[0]);
    FieldElem r(a.field_, reduce(p_mul(a.c_, b.c_), *a.field_));
    return r;
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw BadParams("division by zero field element");
    if (is_rational()) return FieldElem(Rational(1) / c_[0]);
    // Extended Euclid in Q[x]: s*a + t*m = gcd = const, so a^{-1} = s / gcd.
    Poly r0 = minpoly_as_poly(*field_), r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};  // coefficients of the element in the Bezout identity
    while (degree_of(r1) > 0) {
        auto [q, r2] = p_divmod(r0, r1);
        Poly s2 = p_sub(s0, p_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (degree_of(r1) != 0)
        throw BadParams("element shares a factor with the minimal polynomial: not irreducible");
    Rational g = r1[0];
    for (auto& q : s1) q /= g;
    return FieldElem(field_, reduce(s1, *field_));
}

int FieldElem::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return rat_sign(c_[0]);
    RatInterval iv{field_->root_lo, field_->root_hi};
    for (int iter = 0; iter < 100000; ++iter) {
        RatInterval val = eval_interval(c_, iv);
        if (val.lo > 0) return 1;
        if (val.hi < 0) return -1;
        refine_root(*field_, iv);
    }
    throw BadParams("sign refinement failed to converge");
}

std::pair<Rational, Rational> FieldElem::approx(const Rational& eps) const {
    if (is_rational()) return {c_[0], c_[0]};
    RatInterval iv{field_->root_lo, field_->root_hi};
    for (int iter = 0; iter < 1000000; ++iter) {
        RatInterval val = eval_interval(c_, iv);
        if (val.hi - val.lo <= eps) return {val.lo, val.hi};
        refine_root(*field_, iv);
    }
    throw BadParams("approximation refinement failed to converge");
}

Real FieldElem::to_real() const {
    unsigned digits = Real::default_precision();
    Rational eps = Rational(1, BigInt(1) << (unsigned)(digits * 3.33 + 16));
    auto [lo, hi] = approx(eps);
    Rational mid = (lo + hi) / 2;
    Real num(boost::multiprecision::numerator(mid).str());
    Real den(boost::multiprecision::denominator(mid).str());
    return num / den;
}

std::string FieldElem::key() const {
    std::ostringstream os;
    os << (field_ ? field_->name : "Q");
    for (const auto& q : c_) os << ';' << q;
    return os.str();
}

}  // namespace lexent
