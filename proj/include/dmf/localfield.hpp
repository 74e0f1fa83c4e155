#ifndef DMF_LOCALFIELD_HPP
#define DMF_LOCALFIELD_HPP

#include <mutex>

#include "dmf/drinfeld.hpp"

namespace dmf {

// F_{q^m}((u)) with theta = u^{-ram} exactly; ram(ification) must be a
// multiple of q-1 whenever the Carlitz period is requested. Elements are
// precision-tracked Laurent series in u with F_{q^m} coefficients;
// |x| = q^{-v_u(x)/ram}, so |theta| = q.
class LocalField {
  public:
    using Elem = LaurentSeries<FqElem>;

    LocalField(int p, int s, int m, int ram, long long prec);

    const FqField* coeff_field() const { return Fm_; }
    const FqField* base_field() const { return Fq_; }
    int ram() const { return ram_; }
    long long prec() const { return prec_; }
    uint32_t q() const { return Fq_->q; }

    Elem zero() const { return Elem::zero(FqElem(Fm_, 0), prec_); }
    Elem one() const { return Elem::monomial(FqElem(Fm_, 1), 0, prec_); }
    Elem u_power(long long k) const { return Elem::monomial(FqElem(Fm_, 1), k, prec_); }
    Elem from_coeff(FqElem c, long long e = 0) const { return Elem::monomial(c, e, prec_); }
    Elem theta() const { return u_power(-ram_); }

    Elem embed(const PolyA& a) const;
    Elem embed(const RatK& a) const;
    // an element given in the unramified presentation F_{q^m}((1/theta)):
    // exponent j of (1/theta) lands at u^{j*ram}
    Elem from_unramified(const std::vector<std::pair<long long, FqElem>>& terms) const;

    // coefficientwise Frobenius x -> x^q: a continuous automorphism fixing
    // K_infty = F_q((u^ram)) and, by the convention here, u itself
    Elem frobenius(const Elem& x) const;

    // chosen (q-1)-st root of -theta: zeta0 * u^{-ram/(q-1)}; choice twists
    // zeta0 by successive (q-1)-st roots of unity
    FqElem root_unit(int choice = 0) const;
    Elem root_of_minus_theta(int choice = 0) const;

    // Carlitz period theta (-theta)^{1/(q-1)} prod (1 - theta^{1-q^i})^{-1}
    Elem carlitz_period(int choice = 0) const;

    // sum beta_j w^{q^j}, numerically truncated once terms drop below prec
    Elem carlitz_exp(const Elem& w) const;

    // z prod over nonzero b in A, deg b <= cutoff, of (1 - z/(gen*b))
    Elem lattice_exp(const Elem& gen, const Elem& z, int cutoff) const;

    // F_q-linear polynomial with root set {b in A : deg b < dim} and unit
    // linear coefficient, evaluated at w (tower recursion, never enumerates)
    Elem finite_exp(const Elem& w, int dim) const;

    // u-valuation of the distance to K_infty (ultrametric minimum over the
    // truncation net, attained digitwise); z in K_infty gives prec
    long long im_val(const Elem& z) const;

  private:
    const FqField* Fm_;
    const FqField* Fq_;
    int ram_;
    long long prec_;
    mutable std::vector<RatK> beta_;  // Carlitz exp coefficients over K
    mutable std::mutex mu_;
    const RatK& beta(int j) const;
};

// convenience entry points
LocalField::Elem carlitz_period_numeric(int p, int s, long long prec);
LocalField::Elem lattice_exp_numeric(const LocalField& lf, const LocalField::Elem& gen,
                                     const LocalField::Elem& z, int cutoff);

}  // namespace dmf

#endif
