#ifndef DMF_SKEW_HPP
#define DMF_SKEW_HPP

#include <vector>

#include "dmf/errors.hpp"
#include "dmf/laurent.hpp"

namespace dmf {

// R[tau] with tau c = c^q tau. Coefficient types must provide ring ops,
// is_zero(), and a free frob_q().
template <class C>
class TwistedPoly {
  public:
    explicit TwistedPoly(const C& proto) : zero_(ring_zero(proto)) {}
    TwistedPoly(const C& proto, std::vector<C> coeffs) : zero_(ring_zero(proto)), a_(std::move(coeffs)) {
        trim();
    }
    static TwistedPoly constant(const C& c) { return TwistedPoly(c, {c}); }
    static TwistedPoly tau_power(const C& proto, int i) {
        std::vector<C> v(size_t(i) + 1, ring_zero(proto));
        v.back() = ring_one(proto);
        return TwistedPoly(proto, std::move(v));
    }

    const C& proto() const { return zero_; }
    bool is_zero() const { return a_.empty(); }
    int degree() const { return int(a_.size()) - 1; }
    const C& coeff(int i) const { return (i >= 0 && i < int(a_.size())) ? a_[size_t(i)] : zero_; }
    const std::vector<C>& coeffs() const { return a_; }

    // (partial, leading) = (tau^0 coefficient, top coefficient)
    C partial() const { return coeff(0); }
    C leading() const {
        if (a_.empty()) throw zero_polynomial("leading coefficient of the zero skew polynomial");
        return a_.back();
    }

    friend TwistedPoly operator+(const TwistedPoly& u, const TwistedPoly& v) {
        TwistedPoly r(u.zero_);
        r.a_.assign(std::max(u.a_.size(), v.a_.size()), u.zero_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = u.coeff(int(i)) + v.coeff(int(i));
        r.trim();
        return r;
    }
    friend TwistedPoly operator-(const TwistedPoly& u, const TwistedPoly& v) {
        TwistedPoly r(u.zero_);
        r.a_.assign(std::max(u.a_.size(), v.a_.size()), u.zero_);
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = u.coeff(int(i)) - v.coeff(int(i));
        r.trim();
        return r;
    }

    // tau^i c = frob^i(c) tau^i
    friend TwistedPoly operator*(const TwistedPoly& u, const TwistedPoly& v) {
        TwistedPoly r(u.zero_);
        if (u.is_zero() || v.is_zero()) return r;
        r.a_.assign(u.a_.size() + v.a_.size() - 1, u.zero_);
        for (size_t i = 0; i < u.a_.size(); ++i) {
            if (u.a_[i].is_zero()) continue;
            for (size_t j = 0; j < v.a_.size(); ++j) {
                if (v.a_[j].is_zero()) continue;
                C twisted = v.a_[j];
                for (size_t k = 0; k < i; ++k) twisted = frob_q(twisted);
                r.a_[i + j] = r.a_[i + j] + u.a_[i] * twisted;
            }
        }
        r.trim();
        return r;
    }

    friend bool operator==(const TwistedPoly& u, const TwistedPoly& v) {
        int d = std::max(u.degree(), v.degree());
        for (int i = 0; i <= d; ++i)
            if (!(u.coeff(i) == v.coeff(i))) return false;
        return true;
    }
    friend bool operator!=(const TwistedPoly& u, const TwistedPoly& v) { return !(u == v); }

    TwistedPoly scaled(const C& c) const {
        TwistedPoly r(zero_);
        r.a_ = a_;
        for (auto& x : r.a_) x = x * c;
        r.trim();
        return r;
    }

    // u(z) = sum a_i z^(q^i) for z in the same coefficient ring
    C apply(const C& z) const {
        C acc = zero_;
        C zq = z;
        for (size_t i = 0; i < a_.size(); ++i) {
            if (i) zq = frob_q(zq);
            if (!a_[i].is_zero()) acc = acc + a_[i] * zq;
        }
        return acc;
    }

    // u(s) for a series argument over the same coefficients
    LaurentSeries<C> apply(const LaurentSeries<C>& s) const {
        LaurentSeries<C> acc = LaurentSeries<C>::zero(zero_, s.prec());
        LaurentSeries<C> zq = s;
        for (size_t i = 0; i < a_.size(); ++i) {
            if (i) zq = zq.frob();
            if (!a_[i].is_zero()) acc = acc + zq.scaled(a_[i]);
        }
        return acc;
    }

  private:
    C zero_;
    std::vector<C> a_;
    void trim() {
        while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
    }
};

// R[[tau]] truncated at an explicit tau-order (coefficients 0..order kept).
template <class C>
class TwistedSeries {
  public:
    TwistedSeries(const C& proto, int order)
        : zero_(ring_zero(proto)), order_(order), b_(size_t(order) + 1, ring_zero(proto)) {}
    TwistedSeries(std::vector<C> coeffs, int order) : zero_(ring_zero(coeffs.at(0))), order_(order) {
        coeffs.resize(size_t(order) + 1, zero_);
        b_ = std::move(coeffs);
    }

    int order() const { return order_; }
    const C& proto() const { return zero_; }
    const C& coeff(int i) const { return (i >= 0 && i <= order_) ? b_[size_t(i)] : zero_; }
    void set_coeff(int i, const C& c) { b_.at(size_t(i)) = c; }

    TwistedSeries truncated(int order) const {
        TwistedSeries r(zero_, order);
        for (int i = 0; i <= order; ++i) r.b_[size_t(i)] = coeff(i);
        return r;
    }

    friend TwistedSeries operator+(const TwistedSeries& u, const TwistedSeries& v) {
        int n = std::min(u.order_, v.order_);
        TwistedSeries r(u.zero_, n);
        for (int i = 0; i <= n; ++i) r.b_[size_t(i)] = u.coeff(i) + v.coeff(i);
        return r;
    }

    friend TwistedSeries operator*(const TwistedSeries& u, const TwistedSeries& v) {
        int n = std::min(u.order_, v.order_);
        TwistedSeries r(u.zero_, n);
        for (int i = 0; i <= n; ++i) {
            if (u.coeff(i).is_zero()) continue;
            C f = u.coeff(i);
            for (int j = 0; i + j <= n; ++j) {
                if (v.coeff(j).is_zero()) continue;
                C twisted = v.coeff(j);
                for (int k = 0; k < i; ++k) twisted = frob_q(twisted);
                r.b_[size_t(i + j)] = r.b_[size_t(i + j)] + f * twisted;
            }
        }
        return r;
    }

    friend TwistedSeries operator*(const TwistedPoly<C>& u, const TwistedSeries& v) {
        return v.poly_times(u);
    }

    // right multiplication by a plain polynomial
    TwistedSeries times_poly(const TwistedPoly<C>& v) const {
        TwistedSeries r(zero_, order_);
        for (int i = 0; i <= order_; ++i) {
            if (b_[size_t(i)].is_zero()) continue;
            for (int j = 0; j <= v.degree() && i + j <= order_; ++j) {
                C twisted = v.coeff(j);
                if (twisted.is_zero()) continue;
                for (int k = 0; k < i; ++k) twisted = frob_q(twisted);
                r.b_[size_t(i + j)] = r.b_[size_t(i + j)] + b_[size_t(i)] * twisted;
            }
        }
        return r;
    }
    TwistedSeries poly_times(const TwistedPoly<C>& u) const {
        TwistedSeries r(zero_, order_);
        for (int i = 0; i <= u.degree(); ++i) {
            if (u.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= order_; ++j) {
                if (b_[size_t(j)].is_zero()) continue;
                C twisted = b_[size_t(j)];
                for (int k = 0; k < i; ++k) twisted = frob_q(twisted);
                r.b_[size_t(i + j)] = r.b_[size_t(i + j)] + u.coeff(i) * twisted;
            }
        }
        return r;
    }

    // two-sided inverse (beta_0 must be a unit); in B[[tau]] this is also the
    // compositional inverse of the F_q-linear series
    TwistedSeries inverse() const {
        TwistedSeries r(zero_, order_);
        C b0inv = b_[0].inverse();
        r.b_[0] = b0inv;
        for (int k = 1; k <= order_; ++k) {
            // coefficient of tau^k in (this * r) must vanish:
            // sum_{i+j=k} b_i frob^i(r_j) = 0
            C s = zero_;
            for (int i = 1; i <= k; ++i) {
                if (b_[size_t(i)].is_zero()) continue;
                C twisted = r.b_[size_t(k - i)];
                for (int t = 0; t < i; ++t) twisted = frob_q(twisted);
                s = s + b_[size_t(i)] * twisted;
            }
            // b_0 frob^0(r_k) = -s
            r.b_[size_t(k)] = -(b0inv * s);
        }
        return r;
    }

    friend bool operator==(const TwistedSeries& u, const TwistedSeries& v) {
        int n = std::min(u.order_, v.order_);
        for (int i = 0; i <= n; ++i)
            if (!(u.coeff(i) == v.coeff(i))) return false;
        return true;
    }

    TwistedPoly<C> as_poly() const { return TwistedPoly<C>(zero_, b_); }

    // sum b_i x^(q^i)
    C apply(const C& z) const { return as_poly().apply(z); }
    LaurentSeries<C> apply(const LaurentSeries<C>& s) const { return as_poly().apply(s); }

  private:
    C zero_;
    int order_;
    std::vector<C> b_;
};

template <class C>
bool is_identity(const TwistedSeries<C>& s) {
    if (!(s.coeff(0) == ring_one(s.proto()))) return false;
    for (int i = 1; i <= s.order(); ++i)
        if (!s.coeff(i).is_zero()) return false;
    return true;
}

}  // namespace dmf

#endif
