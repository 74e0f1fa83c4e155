#include "dmf/rat.hpp"

namespace dmf {

namespace {
// gcd that tries exact-division shortcuts first; the coefficient towers here
// produce nested denominators (D_i = D_{i-1}^q (theta^{q^i}-theta)) where one
// side usually divides the other, and full Euclid on those is quadratic.
PolyA gcd_smart(const PolyA& a, const PolyA& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.scaled(b.field()->inv(b.lc()));
    if (b.is_zero()) return a.scaled(a.field()->inv(a.lc()));
    if (a.degree() >= b.degree() + 16) {
        PolyA q;
        if (PolyA::try_exact_div(a, b, q)) return b.scaled(b.field()->inv(b.lc()));
    } else if (b.degree() >= a.degree() + 16) {
        PolyA q;
        if (PolyA::try_exact_div(b, a, q)) return a.scaled(a.field()->inv(a.lc()));
    }
    return PolyA::gcd(a, b);
}
}  // namespace

RatK::RatK(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw division_by_zero("zero denominator in K");
    if (num_.is_zero()) {
        den_ = PolyA::one(den_.field());
        num_ = PolyA::zero(den_.field());
        return;
    }
    if (!den_.is_one()) {
        PolyA g = gcd_smart(num_, den_);
        if (g.degree() > 0) {
            PolyA q;
            PolyA::try_exact_div(num_, g, q);
            num_ = q;
            PolyA::try_exact_div(den_, g, q);
            den_ = q;
        }
    }
    if (!den_.is_monic()) {
        uint32_t c = den_.field()->inv(den_.lc());
        num_ = num_.scaled(c);
        den_ = den_.scaled(c);
    }
}

RatK RatK::operator-() const {
    RatK r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatK operator+(const RatK& a, const RatK& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatK(a.num_ + b.num_, a.den_);
    PolyA g = gcd_smart(a.den_, b.den_);
    if (g.degree() <= 0) return RatK(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    PolyA da, db;
    PolyA::try_exact_div(a.den_, g, da);
    PolyA::try_exact_div(b.den_, g, db);
    return RatK(a.num_ * db + b.num_ * da, a.den_ * db);
}

RatK operator-(const RatK& a, const RatK& b) { return a + (-b); }

RatK operator*(const RatK& a, const RatK& b) {
    if (a.is_zero() || b.is_zero()) return RatK::zero(a.field() ? a.field() : b.field());
    // cross-reduce before multiplying
    PolyA g1 = gcd_smart(a.num_, b.den_);
    PolyA g2 = gcd_smart(b.num_, a.den_);
    PolyA an = a.num_, bd = b.den_, bn = b.num_, ad = a.den_;
    PolyA t;
    if (g1.degree() > 0) {
        PolyA::try_exact_div(an, g1, t); an = t;
        PolyA::try_exact_div(bd, g1, t); bd = t;
    }
    if (g2.degree() > 0) {
        PolyA::try_exact_div(bn, g2, t); bn = t;
        PolyA::try_exact_div(ad, g2, t); ad = t;
    }
    return RatK(an * bn, ad * bd);
}

RatK operator/(const RatK& a, const RatK& b) { return a * b.inverse(); }

RatK RatK::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in K");
    return RatK(den_, num_);
}

RatK RatK::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatK r = RatK::one(field());
    RatK b = *this;
    unsigned long long u = (unsigned long long)e;
    while (u) {
        if (u & 1) r = r * b;
        b = b * b;
        u >>= 1;
    }
    return r;
}

RatK RatK::frob_power(int e) const {
    if (is_zero() || e == 0) return *this;
    RatK r;
    r.num_ = num_.frob_power(e);
    r.den_ = den_.frob_power(e);
    return r;  // stays canonical: gcd(n,d)=1 => gcd(n^(q^e),d^(q^e))=1, den stays monic
}

std::string RatK::to_string() const {
    if (is_integral()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

RatK RatK::parse(const FqField* F, const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return RatK(PolyA::parse(F, s));
    return RatK(PolyA::parse(F, s.substr(0, slash)), PolyA::parse(F, s.substr(slash + 1)));
}

}  // namespace dmf
