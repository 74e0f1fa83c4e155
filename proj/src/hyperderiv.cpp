#include "dmf/hyperderiv.hpp"

namespace dmf {

long long binom_mod_p(long long top, long long k, int p) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (top < 0) {
        // binom(-n, k) = (-1)^k binom(n+k-1, k)
        long long v = binom_mod_p(-top + k - 1, k, p);
        return (k % 2) ? (v ? (long long)p - v : 0) : v;
    }
    if (k > top) return 0;
    long long r = 1;
    long long n = top, m = k;
    while (m > 0) {
        long long nd = n % p, md = m % p;
        if (md > nd) return 0;
        long long num = 1, den = 1;
        for (long long i = 0; i < md; ++i) {
            num = (num * ((nd - i) % p)) % p;
            den = (den * ((i + 1) % p)) % p;
        }
        long long inv = 1, base = den, e = p - 2;
        while (e) {
            if (e & 1) inv = (inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        r = (r * ((num * inv) % p)) % p;
        n /= p;
        m /= p;
    }
    return r;
}

HyperDerivTable HyperDerivTable::build(const TExpansionEngine& eng, int N) {
    // der^n(t) from t * e_C = 1 and the product rule: hyperderivatives of the
    // F_q-linear e_C vanish except at orders q^j (Lucas on binom(q^j, n)), so
    //   der^n(t) = -t * sum_{j : q^j <= n} beta_j der^{n-q^j}(t).
    HyperDerivTable tab;
    tab.N = N;
    const FqField* F = eng.field();
    RatK proto = RatK::zero(F);
    long long q = F->q;
    using S = LaurentSeries<RatK>;
    tab.d.reserve(size_t(N) + 1);
    tab.d.push_back(S::monomial(RatK::one(F), 1));  // der^0(t) = t
    for (int n = 1; n <= N; ++n) {
        S acc = S::zero(proto);
        for (long long qp = 1; qp <= n; qp *= q) {
            int j = 0;
            for (long long t = 1; t < qp; t *= q) ++j;
            acc = acc + tab.d[size_t(n - qp)].scaled(eng.carlitz_exp_coeff(j));
        }
        tab.d.push_back((-acc).shifted(1));  // multiply by -t
    }
    return tab;
}

std::vector<PeriodRing> HyperDerivTable::period_poly(int n) const {
    // D^n(t) = Pi^n der^n(t), dense t-coefficients starting at t^0
    const LaurentSeries<RatK>& s = d.at(size_t(n));
    long long top = 0;
    s.for_each_term([&](long long e, const RatK&) { top = std::max(top, e); });
    std::vector<PeriodRing> out(size_t(top) + 1, PeriodRing(field_of(s)));
    s.for_each_term([&](long long e, const RatK& c) { out[size_t(e)] = PeriodRing::from_k(c, n); });
    return out;
}

const FqField* HyperDerivTable::field_of(const LaurentSeries<RatK>& s) {
    return s.proto().field();
}

LaurentSeries<RatK> hyperderiv_comp_sum(const HyperDerivTable& tab, int n, int k) {
    // a_{n,k} = sum over ordered compositions n = n_1 + ... + n_k (n_i >= 1)
    // of prod_i der^{n_i}(t); recursion a_{n,k} = sum_m der^m(t) a_{n-m,k-1}
    const RatK proto = tab.der_t(0).proto();
    using S = LaurentSeries<RatK>;
    if (k == 0) return n == 0 ? S::one(proto) : S::zero(proto);
    if (n < k) return S::zero(proto);
    // prev[m] holds a_{m,j} for the current j as we iterate j = 1..k
    std::vector<S> prev(size_t(n) + 1, S::zero(proto));
    prev[0] = S::one(proto);
    for (int j = 1; j <= k; ++j) {
        std::vector<S> cur(size_t(n) + 1, S::zero(proto));
        for (int m = j; m <= n; ++m) {
            S acc = S::zero(proto);
            for (int t = 1; t <= m - (j - 1); ++t)
                acc = acc + tab.der_t(t) * prev[size_t(m - t)];
            cur[size_t(m)] = acc;
        }
        prev = std::move(cur);
    }
    return prev[size_t(n)];
}

TExpansion hyperderivative(const HyperDerivTable& tab, const TExpansion& f, int n) {
    if (n == 0) return f;
    if (n > tab.order()) throw precision_exhausted("hyperderivative table too short");
    // der^n(F o t) = sum_{k=1}^{n} (divided d/dt)^[k](F)(t) * a_{n,k}(t)
    const RatK proto = f.series.proto();
    const FqField* fld = proto.field();
    using S = LaurentSeries<RatK>;
    long long pout = f.series.exact() ? S::exact_prec : f.prec() - n;
    S acc = S::zero(proto, pout);
    // reuse the a_{n,k} recursion across k in one sweep
    std::vector<S> prev(size_t(n) + 1, S::zero(proto));
    prev[0] = S::one(proto);
    for (int k = 1; k <= n; ++k) {
        std::vector<S> cur(size_t(n) + 1, S::zero(proto));
        for (int m = k; m <= n; ++m) {
            S s = S::zero(proto);
            for (int t = 1; t <= m - (k - 1); ++t) s = s + tab.der_t(t) * prev[size_t(m - t)];
            cur[size_t(m)] = s;
        }
        S dk = f.series.divided_derivative(k);
        if (!dk.known_zero()) acc = acc + (dk * cur[size_t(n)]).truncated(pout);
        prev = std::move(cur);
    }
    std::optional<int> ty;
    if (f.type) ty = type_mod(*f.type + n, fld->q);
    return TExpansion(acc.truncated(pout), f.weight + 2 * n, ty);
}

}  // namespace dmf
