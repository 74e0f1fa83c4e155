#ifndef DMF_TEXP_HPP
#define DMF_TEXP_HPP

#include <map>
#include <mutex>
#include <optional>

#include "dmf/drinfeld.hpp"

namespace dmf {

using KSeries = LaurentSeries<RatK>;

// Arithmetic t-expansion of a weight-k form: the stored series is the
// expansion of Pi^{-k} * form, so its coefficients live in K. The type is a
// residue mod (q-1); sums of forms of different types carry no single type.
struct TExpansion {
    KSeries series;
    long long weight = 0;
    std::optional<int> type;

    TExpansion(KSeries s, long long k, std::optional<int> m) : series(std::move(s)), weight(k), type(m) {}

    long long prec() const { return series.prec(); }
    bool has_principal_part() const { return !series.known_zero() && series.val() < 0; }
};

TExpansion texp_mul(const TExpansion& a, const TExpansion& b);
TExpansion texp_add(const TExpansion& a, const TExpansion& b);
TExpansion texp_scale(const TExpansion& a, const RatK& c);
TExpansion texp_neg(const TExpansion& a);
int type_mod(long long v, uint32_t q);

// k-th Goss polynomial of the period lattice Pi*A; coefficients land in K.
struct GossPoly {
    int k;
    std::vector<RatK> coeffs;  // ascending in X, coeffs[0] = constant (always 0)

    int degree() const { return int(coeffs.size()) - 1; }
    const RatK& coeff(int i) const { return coeffs.at(size_t(i)); }
    // substitute a series with valuation >= 1
    KSeries eval_series(const KSeries& s) const;
    std::string to_string() const;
};

enum class DeltaRoute { recursion, product, both };
enum class ERoute { logderiv, monicsum, both };

// Expansion engine for GL_2(A), Y = A^2: one cusp, uniformizer
// t(z) = 1/exp_{Pi A}(Pi z). Caches are guarded; instances are shareable
// between threads.
class TExpansionEngine {
  public:
    explicit TExpansionEngine(const FqField* F);

    const FqField* field() const { return F_; }
    uint32_t q() const { return F_->q; }

    // Carlitz exponential coefficient beta_i = 1/D_i (D_0 = 1)
    RatK carlitz_exp_coeff(int i) const;
    // Carlitz factorial D_i
    RatK carlitz_factorial(int i) const;

    GossPoly goss_poly(int k) const;

    // t(az) as a power series in t, lowest term t^{q^deg a} / lc(C_a)
    KSeries reexpand_scaled(const PolyA& a, long long N) const;

    // normalized zeta value: sum over nonzero b in A of (Pi b)^{-k}, an
    // element of K (zero unless (q-1) | k)
    RatK zeta_normalized(int k) const;

    // arithmetic expansion of Pi^{-k} E_k; the zero expansion when (q-1)∤k
    TExpansion eisenstein(int k, long long N) const;

    // arithmetic expansions of Pi^{1-q^i} g_{i,theta}: (g1~, g2~ = Delta~)
    std::pair<TExpansion, TExpansion> coefficient_forms(long long N) const;

    TExpansion delta(long long N, DeltaRoute route = DeltaRoute::recursion) const;
    // constants of the product formula, derived by matching the recursion route
    struct DeltaProductShape {
        long long t_exponent;  // k in c t^k prod(...)
        RatK leading;          // c
    };
    DeltaProductShape delta_product_shape() const;
    TExpansion delta_product(long long N) const;

    // false Eisenstein series E (weight 2, type 1); the stored series equals
    // the t-expansion of E itself (E is already Pi-normalized by its
    // definition E = der(Delta)/Delta)
    TExpansion false_eisenstein(long long N, ERoute route = ERoute::both) const;

    // j-invariant-style modular function g1~^(q+1)/Delta~ (weight 0)
    TExpansion j_function(long long N) const;

  private:
    const FqField* F_;
    mutable std::mutex mu_;
    mutable std::vector<RatK> beta_;        // Carlitz exp coefficients
    mutable std::vector<RatK> dfact_;       // Carlitz factorials D_i
    mutable std::map<int, GossPoly> goss_;
    mutable std::map<int, RatK> zeta_;

    KSeries expansion_of_one_over_carlitz_exp(long long N) const;  // 1/e_C(z) as z-Laurent series
};

}  // namespace dmf

#endif
