#ifndef DMF_LAURENT_HPP
#define DMF_LAURENT_HPP

#include <algorithm>
#include <functional>
#include <sstream>
#include <vector>

#include "dmf/errors.hpp"
#include "dmf/fq.hpp"
#include "dmf/period.hpp"
#include "dmf/rat.hpp"

namespace dmf {

// ring adaptors for the coefficient universes
inline FqElem ring_zero(const FqElem& proto) { return {proto.F, 0}; }
inline FqElem ring_one(const FqElem& proto) { return {proto.F, 1}; }
inline FqElem ring_from_int(const FqElem& proto, long long v) { return {proto.F, proto.F->from_int(v)}; }
inline uint32_t ring_q(const FqElem& proto) { return proto.F->q; }
inline int ring_p(const FqElem& proto) { return proto.F->p; }

inline RatK ring_zero(const RatK& proto) { return RatK::zero(proto.field()); }
inline RatK ring_one(const RatK& proto) { return RatK::one(proto.field()); }
inline RatK ring_from_int(const RatK& proto, long long v) { return RatK::from_int(proto.field(), v); }
inline uint32_t ring_q(const RatK& proto) { return proto.field()->q; }
inline int ring_p(const RatK& proto) { return proto.field()->p; }

inline PeriodRing ring_zero(const PeriodRing& proto) { return PeriodRing(proto.field()); }
inline PeriodRing ring_one(const PeriodRing& proto) {
    return PeriodRing::from_k(RatK::one(proto.field()));
}
inline PeriodRing ring_from_int(const PeriodRing& proto, long long v) {
    return PeriodRing::from_k(RatK::from_int(proto.field(), v));
}
inline uint32_t ring_q(const PeriodRing& proto) { return proto.field()->q; }
inline int ring_p(const PeriodRing& proto) { return proto.field()->p; }

// binomial coefficient mod p by Lucas, with the usual extension to a
// negative upper index: binom(-n, k) = (-1)^k binom(n+k-1, k)
long long binom_mod_p(long long top, long long k, int p);

inline std::string coeff_repr(const FqElem& c) { return std::to_string(c.v); }
inline std::string coeff_repr(const RatK& c) { return c.to_string(); }
inline std::string coeff_repr(const PeriodRing& c) { return c.to_string(); }

// Laurent series with explicit precision: coefficients are known exactly for
// all exponents < prec and stored for val <= e < prec. A series with no
// stored coefficients is known-zero through its precision.
template <class C>
class LaurentSeries {
  public:
    static constexpr long long exact_prec = (1LL << 58);

    explicit LaurentSeries(const C& proto, long long prec = exact_prec)
        : zero_(ring_zero(proto)), val_(0), prec_(prec) {}

    static LaurentSeries zero(const C& proto, long long prec = exact_prec) {
        return LaurentSeries(proto, prec);
    }
    static LaurentSeries monomial(const C& c, long long e, long long prec = exact_prec) {
        LaurentSeries r(c, prec);
        if (!c.is_zero() && e < prec) {
            r.val_ = e;
            r.c_.push_back(c);
        }
        return r;
    }
    static LaurentSeries one(const C& proto, long long prec = exact_prec) {
        return monomial(ring_one(proto), 0, prec);
    }
    static LaurentSeries from_coeffs(const C& proto, long long val, std::vector<C> coeffs,
                                     long long prec = exact_prec) {
        LaurentSeries r(proto, prec);
        r.val_ = val;
        r.c_ = std::move(coeffs);
        r.normalize();
        return r;
    }

    const C& proto() const { return zero_; }
    long long prec() const { return prec_; }
    bool exact() const { return prec_ >= exact_prec; }
    bool known_zero() const { return c_.empty(); }
    bool is_zero() const { return c_.empty(); }  // zero to tracked precision
    // valuation; if known-zero the series is 0 below prec, report prec
    long long val() const { return c_.empty() ? prec_ : val_; }
    size_t term_count() const { return c_.size(); }

    const C& coeff(long long e) const {
        if (c_.empty() || e < val_ || e >= val_ + (long long)c_.size()) return zero_;
        return c_[size_t(e - val_)];
    }
    C leading() const {
        if (c_.empty()) throw zero_leading_coefficient("series is zero to available precision");
        return c_.front();
    }

    void for_each_term(const std::function<void(long long, const C&)>& fn) const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) fn(val_ + (long long)i, c_[i]);
    }

    LaurentSeries truncated(long long N) const {
        LaurentSeries r = *this;
        r.prec_ = std::min(prec_, N);
        r.normalize();
        return r;
    }

    LaurentSeries shifted(long long k) const {  // * t^k
        LaurentSeries r = *this;
        r.val_ += k;
        r.prec_ = sat_add(prec_, k);
        return r;
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries r(a.zero_, std::min(a.prec_, b.prec_));
        if (a.c_.empty() && b.c_.empty()) return r;
        long long lo = std::min(a.val(), b.val());
        long long hi = std::min(std::max(a.top(), b.top()), r.prec_);
        if (lo >= hi) return r;
        r.val_ = lo;
        r.c_.assign(size_t(hi - lo), a.zero_);
        for (size_t i = 0; i < r.c_.size(); ++i) {
            long long e = lo + (long long)i;
            r.c_[i] = a.coeff(e) + b.coeff(e);
        }
        r.normalize();
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + (-b);
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        long long p = std::min(sat_add(a.prec_, b.val()), sat_add(b.prec_, a.val()));
        LaurentSeries r(a.zero_, p);
        if (a.c_.empty() || b.c_.empty()) return r;
        long long lo = a.val_ + b.val_;
        if (lo >= p) return r;
        size_t len = size_t(std::min(a.top() + b.top() - 1 - lo, p - lo));
        r.val_ = lo;
        r.c_.assign(len, a.zero_);
        for (size_t i = 0; i < a.c_.size() && i < len; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size() && i + j < len; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        r.normalize();
        return r;
    }

    LaurentSeries scaled(const C& c) const {
        LaurentSeries r(zero_, prec_);
        if (c.is_zero() || c_.empty()) return r;
        r.val_ = val_;
        r.c_ = c_;
        for (auto& x : r.c_) x = x * c;
        r.normalize();
        return r;
    }

    // multiplicative inverse; requires a unit leading coefficient
    LaurentSeries inverse() const {
        if (c_.empty()) throw zero_leading_coefficient("inverting a series that is zero to precision");
        C a0inv = c_.front().inverse();
        if (exact() && c_.size() == 1) return LaurentSeries::monomial(a0inv, -val_, exact_prec);
        if (exact())
            throw precision_exhausted("inverse of a non-monomial exact series needs a truncation order");
        long long n = prec_ - val_;  // relative order
        std::vector<C> b(size_t(n), zero_);
        b[0] = a0inv;
        for (long long k = 1; k < n; ++k) {
            C s = zero_;
            long long jmax = std::min<long long>(k, (long long)c_.size() - 1);
            for (long long j = 1; j <= jmax; ++j) {
                if (c_[size_t(j)].is_zero()) continue;
                s = s + c_[size_t(j)] * b[size_t(k - j)];
            }
            b[size_t(k)] = -(a0inv * s);
        }
        LaurentSeries r(zero_, prec_ - 2 * val_);
        r.val_ = -val_;
        r.c_ = std::move(b);
        r.normalize();
        return r;
    }

    LaurentSeries pow(unsigned long long e) const {
        LaurentSeries r = LaurentSeries::one(zero_);
        LaurentSeries b = *this;
        while (e) {
            if (e & 1) r = r * b;
            if (e >>= 1) b = b * b;
        }
        return r;
    }

    // q-th power Frobenius on the whole series: coefficients to the q, exponents times q
    LaurentSeries frob() const {
        uint32_t q = ring_q(zero_);
        LaurentSeries r(zero_, exact() ? exact_prec : sat_mulq(prec_ - 1, q) + 1);
        if (c_.empty()) return r;
        r.val_ = val_ * q;
        r.c_.assign(size_t((c_.size() - 1) * q + 1), zero_);
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) r.c_[i * q] = frob_q(c_[i]);
        r.normalize();
        return r;
    }
    LaurentSeries frob_power(int e) const {
        LaurentSeries r = *this;
        for (int i = 0; i < e; ++i) r = r.frob();
        return r;
    }

    // d/dt
    LaurentSeries derivative() const {
        LaurentSeries r(zero_, exact() ? exact_prec : prec_ - 1);
        if (c_.empty()) return r;
        r.val_ = val_ - 1;
        r.c_.assign(c_.size(), zero_);
        for (size_t i = 0; i < c_.size(); ++i) {
            long long e = val_ + (long long)i;
            if (!c_[i].is_zero()) r.c_[i] = c_[i] * ring_from_int(zero_, e);
        }
        r.normalize();
        return r;
    }

    // divided k-th derivative: sum binom(e, k) a_e t^(e-k)
    LaurentSeries divided_derivative(long long k) const {
        if (k == 0) return *this;
        LaurentSeries r(zero_, exact() ? exact_prec : prec_ - k);
        if (c_.empty()) return r;
        int p = ring_p(zero_);
        r.val_ = val_ - k;
        r.c_.assign(c_.size(), zero_);
        for (size_t i = 0; i < c_.size(); ++i) {
            long long e = val_ + (long long)i;
            if (c_[i].is_zero()) continue;
            long long bc = binom_mod_p(e, k, p);
            if (bc) r.c_[i] = c_[i] * ring_from_int(zero_, bc);
        }
        r.normalize();
        return r;
    }

    // substitution of `inner` (valuation >= 1) into this series (valuation >= 0)
    LaurentSeries compose(const LaurentSeries& inner) const {
        if (!c_.empty() && val_ < 0) throw domain_error("composition needs a power series outer factor");
        if (inner.val() < 1) throw domain_error("composition needs inner valuation >= 1");
        long long vs = std::max<long long>(inner.val(), 1);
        long long pout = std::min(exact() ? exact_prec : sat_mul(prec_, vs), inner.prec());
        LaurentSeries acc(zero_, pout);
        // Horner from the top stored exponent down to 0
        long long top_e = c_.empty() ? -1 : val_ + (long long)c_.size() - 1;
        for (long long e = top_e; e >= 0; --e) {
            acc = (acc * inner).truncated(pout);
            C ce = coeff(e);
            if (!ce.is_zero()) acc = acc + LaurentSeries::monomial(ce, 0, pout);
        }
        return acc.truncated(pout);
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        long long N = std::min(a.prec_, b.prec_);
        return agree_to(a, b, N);
    }
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    static bool agree_to(const LaurentSeries& a, const LaurentSeries& b, long long N) {
        if (std::min(a.prec_, b.prec_) < N)
            throw precision_exhausted("comparison beyond tracked precision");
        if (a.c_.empty() && b.c_.empty()) return true;
        long long lo = std::min(a.val(), b.val());
        long long hi = std::min(N, std::max(a.top(), b.top()));
        for (long long e = lo; e < hi; ++e)
            if (a.coeff(e) != b.coeff(e)) return false;
        return true;
    }

    std::string to_string(const std::string& var) const {
        if (c_.empty()) return exact() ? "0" : "O(" + var + "^" + std::to_string(prec_) + ")";
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            long long e = val_ + (long long)i;
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c_[i]) << ")";
            if (e != 0) {
                os << "*" << var;
                if (e != 1) os << "^" << e;
            }
        }
        if (!exact()) os << " + O(" << var << "^" << prec_ << ")";
        return os.str();
    }

  private:
    C zero_;
    long long val_;
    long long prec_;
    std::vector<C> c_;

    long long top() const { return c_.empty() ? val_ : val_ + (long long)c_.size(); }  // one past last

    static long long sat_add(long long a, long long b) {
        if (a >= exact_prec || b >= exact_prec) return exact_prec;
        long long s = a + b;
        return s >= exact_prec ? exact_prec : s;
    }
    static long long sat_mul(long long a, long long b) {
        if (a >= exact_prec || b >= exact_prec) return exact_prec;
        if (a > 0 && b > 0 && a > exact_prec / b) return exact_prec;
        return a * b;
    }
    static long long sat_mulq(long long a, uint32_t q) { return sat_mul(a, (long long)q); }

    static std::string coeff_str(const C& c) { return coeff_repr(c); }

    void normalize() {
        // drop stored coefficients at exponents >= prec
        if (!c_.empty()) {
            long long keep = prec_ - val_;
            if (keep <= 0)
                c_.clear();
            else if ((long long)c_.size() > keep)
                c_.resize(size_t(keep));
        }
        // strip leading zeros
        size_t lead = 0;
        while (lead < c_.size() && c_[lead].is_zero()) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + (long)lead);
            val_ += (long long)lead;
        }
        // strip trailing zeros
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        if (c_.empty()) val_ = 0;
    }
};

template <class C>
LaurentSeries<C> frob_q(const LaurentSeries<C>& s) {
    return s.frob();
}

template <class C>
LaurentSeries<C> ring_zero(const LaurentSeries<C>& proto) {
    return LaurentSeries<C>::zero(proto.proto());
}
template <class C>
LaurentSeries<C> ring_one(const LaurentSeries<C>& proto) {
    return LaurentSeries<C>::one(proto.proto());
}
template <class C>
LaurentSeries<C> ring_from_int(const LaurentSeries<C>& proto, long long v) {
    return LaurentSeries<C>::monomial(ring_from_int(proto.proto(), v), 0);
}
template <class C>
uint32_t ring_q(const LaurentSeries<C>& proto) {
    return ring_q(proto.proto());
}
template <class C>
int ring_p(const LaurentSeries<C>& proto) {
    return ring_p(proto.proto());
}
template <class C>
std::string coeff_repr(const LaurentSeries<C>& c) {
    return c.to_string("X");
}

}  // namespace dmf

#endif
