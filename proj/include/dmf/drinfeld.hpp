#ifndef DMF_DRINFELD_HPP
#define DMF_DRINFELD_HPP

#include "dmf/skew.hpp"

namespace dmf {

// theta inside a coefficient ring
inline RatK ring_theta(const RatK& proto) { return RatK::theta(proto.field()); }
inline PeriodRing ring_theta(const PeriodRing& proto) {
    return PeriodRing::from_k(RatK::theta(proto.field()));
}
template <class C>
LaurentSeries<C> ring_theta(const LaurentSeries<C>& proto) {
    return LaurentSeries<C>::monomial(ring_theta(proto.proto()), 0);
}

// Embedding of F_q constants into coefficient rings (packed value -> element).
inline RatK embed_fq_scalar(const RatK& proto, uint32_t c) {
    return RatK::constant(proto.field(), c);
}
inline PeriodRing embed_fq_scalar(const PeriodRing& proto, uint32_t c) {
    return PeriodRing::from_k(RatK::constant(proto.field(), c));
}
inline FqElem embed_fq_scalar(const FqElem& proto, uint32_t c) {
    return {proto.F, proto.F->embed_base(c)};
}
template <class C>
LaurentSeries<C> embed_fq_scalar(const LaurentSeries<C>& proto, uint32_t c) {
    return LaurentSeries<C>::monomial(embed_fq_scalar(proto.proto(), c), 0);
}

// Drinfeld module over C, given by the image of theta; images of arbitrary
// a in A follow by F_q-algebra extension.
template <class C>
struct DrinfeldModule {
    int rank;
    TwistedPoly<C> phi_theta;

    // phi_a = a(phi_theta), Horner in the skew ring; F_q scalars are central
    TwistedPoly<C> of(const PolyA& a) const {
        const C proto = phi_theta.proto();
        TwistedPoly<C> acc(proto);
        for (int i = a.degree(); i >= 0; --i) {
            acc = acc * phi_theta;
            uint32_t c = a.coeff(i);
            if (c) acc = acc + TwistedPoly<C>::constant(embed_fq_scalar(proto, c));
        }
        return acc;
    }
};

// the Carlitz module C_theta = theta + tau over K
inline DrinfeldModule<RatK> carlitz(const FqField* F) {
    RatK proto = RatK::zero(F);
    return {1, TwistedPoly<RatK>(proto, {RatK::theta(F), RatK::one(F)})};
}

template <class C>
DrinfeldModule<C> carlitz_over(const C& proto) {
    return {1, TwistedPoly<C>(proto, {ring_theta(proto), ring_one(proto)})};
}

template <class C>
struct ExpLogPair {
    TwistedSeries<C> exp, log;
};

// exp coefficients from the functional equation exp a = phi_a exp, solved at
// a = theta degree by degree: beta_i (theta^{q^i} - theta) = sum_{j>=1} g_j frob^j(beta_{i-j})
template <class C>
ExpLogPair<C> exp_from_module(const DrinfeldModule<C>& mod, int order) {
    const C proto = mod.phi_theta.proto();
    const C theta = ring_theta(proto);
    TwistedSeries<C> exp(proto, order);
    exp.set_coeff(0, ring_one(proto));
    C theta_pow = theta;  // theta^{q^i}
    for (int i = 1; i <= order; ++i) {
        theta_pow = frob_q(theta_pow);
        C rhs = ring_zero(proto);
        for (int j = 1; j <= std::min(i, mod.phi_theta.degree()); ++j) {
            const C& gj = mod.phi_theta.coeff(j);
            if (gj.is_zero()) continue;
            C twisted = exp.coeff(i - j);
            for (int t = 0; t < j; ++t) twisted = frob_q(twisted);
            rhs = rhs + gj * twisted;
        }
        C denom = theta_pow - theta;
        if (denom.is_zero()) throw non_invertible_denominator("theta^{q^i} - theta is not a unit");
        exp.set_coeff(i, rhs * denom.inverse());
    }
    return {exp, exp.inverse()};
}

}  // namespace dmf

#endif
