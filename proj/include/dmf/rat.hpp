#ifndef DMF_RAT_HPP
#define DMF_RAT_HPP

#include "dmf/poly.hpp"

namespace dmf {

// K = F_q(theta) in canonical form: monic denominator coprime to the numerator.
class RatK {
  public:
    RatK() {}
    explicit RatK(const FqField* F) : num_(F), den_(PolyA::one(F)) {}
    RatK(PolyA num, PolyA den);  // canonicalizes; throws division_by_zero
    explicit RatK(PolyA num) : num_(std::move(num)), den_(PolyA::one(num_.field())) {}

    static RatK zero(const FqField* F) { return RatK(F); }
    static RatK one(const FqField* F) { return RatK(PolyA::one(F)); }
    static RatK theta(const FqField* F) { return RatK(PolyA::theta(F)); }
    static RatK from_int(const FqField* F, long long v) {
        return RatK(PolyA::constant(F, F->from_int(v)));
    }
    static RatK constant(const FqField* F, uint32_t c) { return RatK(PolyA::constant(F, c)); }

    const FqField* field() const { return num_.field(); }
    const PolyA& num() const { return num_; }
    const PolyA& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }
    bool is_unit() const { return !is_zero(); }

    // deg(num) - deg(den); the infinity-adic size is q^height
    int height() const { return num_.degree() - den_.degree(); }

    RatK operator-() const;
    friend RatK operator+(const RatK& a, const RatK& b);
    friend RatK operator-(const RatK& a, const RatK& b);
    friend RatK operator*(const RatK& a, const RatK& b);
    friend RatK operator/(const RatK& a, const RatK& b);
    RatK& operator+=(const RatK& b) { return *this = *this + b; }
    RatK& operator-=(const RatK& b) { return *this = *this - b; }
    RatK& operator*=(const RatK& b) { return *this = *this * b; }
    friend bool operator==(const RatK& a, const RatK& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatK& a, const RatK& b) { return !(a == b); }

    RatK inverse() const;
    RatK pow(long long e) const;
    RatK frob_power(int e) const;  // q^e-th power via exponent stretch
    RatK scaled(uint32_t c) const { return RatK(num_.scaled(c), den_); }

    std::string to_string() const;  // "num" or "num/den"
    static RatK parse(const FqField* F, const std::string& s);

  private:
    PolyA num_, den_;
};

inline RatK frob_q(const RatK& a) { return a.frob_power(1); }

// reduced fraction with monic denominator
inline RatK rat_canonicalize(const PolyA& n, const PolyA& d) { return RatK(n, d); }

// Fraction accumulator that defers reduction: summing terms with large
// structured denominators through canonical RatK addition costs a quadratic
// gcd per step, while a zero test only needs the raw numerator.
class KFractionSum {
  public:
    explicit KFractionSum(const FqField* F) : num_(F), den_(PolyA::one(F)) {}

    void add(const RatK& t) {
        if (t.is_zero()) return;
        num_ = num_ * t.den() + t.num() * den_;
        den_ = den_ * t.den();
    }
    void sub(const RatK& t) {
        if (t.is_zero()) return;
        num_ = num_ * t.den() - t.num() * den_;
        den_ = den_ * t.den();
    }
    bool is_zero() const { return num_.is_zero(); }
    RatK reduced() const { return RatK(num_, den_); }

  private:
    PolyA num_, den_;
};

}  // namespace dmf

#endif
