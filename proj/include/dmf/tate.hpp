#ifndef DMF_TATE_HPP
#define DMF_TATE_HPP

#include "dmf/texp.hpp"

namespace dmf {

// Tate-Drinfeld module at the cusp of GL_2(A): lattice {C_b(1/X)}, its
// X-adically truncated exponential, and the rank-2 coefficients
// phi_theta(Z) = theta Z + g1(X) Z^q + g2(X) Z^{q^2} over K[[X]].
class TateModule {
  public:
    using XSeries = LaurentSeries<RatK>;

    static TateModule build(const FqField* F, long long NX);

    const FqField* field() const { return F_; }
    long long x_precision() const { return NX_; }
    int shells() const { return shells_; }

    // lattice elements C_b(1/X) for all b with q^{deg b} <= N_X
    const std::vector<XSeries>& lattice() const { return lattice_; }
    const TwistedSeries<XSeries>& exp_series() const { return exp_; }
    XSeries exp_apply(const XSeries& w) const { return exp_.apply(w); }

    const TwistedPoly<XSeries>& phi_theta() const { return phi_theta_; }
    const XSeries& g1() const { return g1_; }
    const XSeries& g2() const { return g2_; }

    // top coefficient g_{2 deg a, a}(X) of phi_a
    XSeries top_coeff(const PolyA& a) const;

    // E(mu) = -X^2 (d/dX) g_{2 deg a}(X) / g_{2 deg a}(X); independent of a
    XSeries cusp_false_eisenstein(const PolyA& a) const;
    XSeries cusp_false_eisenstein() const;

  private:
    TateModule() = default;
    const FqField* F_ = nullptr;
    long long NX_ = 0;
    int shells_ = 0;
    std::vector<XSeries> lattice_;
    TwistedSeries<XSeries> exp_{XSeries(RatK()), 0};
    TwistedPoly<XSeries> phi_theta_{XSeries(RatK())};
    XSeries g1_{RatK()}, g2_{RatK()};
};

// basis change between {eta_1, eta_2} and {eta_1, eta'_2 = eta_2 + E(mu) eta_1}
// on component vectors of nearly holomorphic forms; the matrix is unipotent
// with E(mu) in the corner.
struct DeRhamCuspBasis {
    LaurentSeries<RatK> e_mu;  // E(mu) (equivalently E's t-expansion under X -> t)

    // components f_l of sum_l f_l eta_1^{(k-l)} (eta'_2)^{(l)}  ->  coefficients
    // h_j of eta_1^{(k-j)} eta_2^{(j)}: h_j = sum_{l >= j} binom(l, j) E^{l-j} f_l
    std::vector<LaurentSeries<RatK>> to_eta(const std::vector<LaurentSeries<RatK>>& f) const;
    std::vector<LaurentSeries<RatK>> from_eta(const std::vector<LaurentSeries<RatK>>& h) const;
};

}  // namespace dmf

#endif
