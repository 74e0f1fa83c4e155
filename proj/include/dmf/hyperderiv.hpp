#ifndef DMF_HYPERDERIV_HPP
#define DMF_HYPERDERIV_HPP

#include "dmf/texp.hpp"

namespace dmf {

// Table of hyperderivatives of the uniformizer: D^n(t) = Pi^n der^n(t) with
// der^n(t) in K[t] of t-degree <= n+1. Built once, immutable, shareable.
class HyperDerivTable {
  public:
    static HyperDerivTable build(const TExpansionEngine& eng, int N);

    int order() const { return N; }
    // der^n(t) as a t-polynomial (valuation >= 1)
    const LaurentSeries<RatK>& der_t(int n) const { return d.at(size_t(n)); }
    // D^n(t) with PeriodRing coefficients (dense from t^0)
    std::vector<PeriodRing> period_poly(int n) const;

    int N = 0;
    std::vector<LaurentSeries<RatK>> d;

  private:
    static const FqField* field_of(const LaurentSeries<RatK>& s);
};

// der^n f of a t-expansion via the composition rule
//   D^n(F o t) = sum_{k=1}^n (divided d/dt)^[k] F  *  sum over compositions
//                n = n_1 + ... + n_k (ordered, n_i >= 1) of prod_i D^{n_i}(t),
// normalized by Pi^{-n}. Output weight k+2n, type m+n, precision prec - n.
TExpansion hyperderivative(const HyperDerivTable& tab, const TExpansion& f, int n);

// composition-sum polynomials a_{n,k} = sum over ordered compositions of
// prod der^{n_i}(t); exposed for tests
LaurentSeries<RatK> hyperderiv_comp_sum(const HyperDerivTable& tab, int n, int k);

}  // namespace dmf

#endif
