#ifndef DMF_EVAL_HPP
#define DMF_EVAL_HPP

#include "dmf/localfield.hpp"
#include "dmf/nhf.hpp"

namespace dmf {

// matrices in GL_2(K); entries in A and det in F_q^x give Gamma_Y = GL_2(A)
struct GL2K {
    RatK a, b, c, d;

    RatK det() const { return a * d - b * c; }
    bool in_gl2a() const {
        return a.is_integral() && b.is_integral() && c.is_integral() && d.is_integral() &&
               !det().is_zero() && det().is_integral() && det().num().degree() == 0;
    }
    friend GL2K operator*(const GL2K& x, const GL2K& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
};

struct OmegaPoint {
    LocalField::Elem z, phiz, tz;
    long long im_val;  // u-valuation of the distance to K_infty
};

struct EvalResult {
    LocalField::Elem value;
    long long tail_val;  // u-valuation bound for the truncation tail
};

struct CheckLine {
    std::string name;
    bool pass;
    // log_q of the measured relative error (negative and large is good);
    // +infinity-ish sentinel 1e9 marks exact-zero errors as log 0 -> use -1e9
    double err_logq;
};

struct CheckReport {
    std::vector<CheckLine> lines;
    bool all_pass() const {
        for (auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

// Numeric evaluation of t-expansions and nearly holomorphic forms at points
// of Omega^phi(M) for M = F_{q^m}((u)), with phi the coefficientwise
// Frobenius. Forms are evaluated in the arithmetic normalization; the
// un-normalized value carries an extra Pi^weight.
class Evaluator {
  public:
    Evaluator(const TExpansionEngine& eng, long long uprec, int root_choice = 0);

    const LocalField& field() const { return lf_; }
    const LocalField::Elem& pitilde() const { return pi_; }
    const TExpansionEngine& engine() const { return *eng_; }

    // z - phi(z) must be nonzero to precision
    OmegaPoint point(const LocalField::Elem& z) const;
    // z = zeta theta^n + shift for the multiplicative generator zeta of F_{q^2}
    OmegaPoint sample_point(int theta_power, const PolyA& shift) const;

    EvalResult eval_texp(const TExpansion& f, const OmegaPoint& P, bool unnormalized = false) const;
    EvalResult eval_nhf(const NearlyHoloForm& F, const OmegaPoint& P) const;

    LocalField::Elem act(const GL2K& g, const LocalField::Elem& z) const;
    LocalField::Elem j_factor(const GL2K& g, const LocalField::Elem& z) const;  // c z + d

    // relative-error exponent log_q |lhs - rhs| / |rhs| (or absolute vs scale)
    double rel_err_logq(const LocalField::Elem& lhs, const LocalField::Elem& rhs) const;
    double abs_logq(const LocalField::Elem& x) const;

    // named transformation identities evaluated at a point
    // 1/(gz - phi(gz)) = j^2 det^{-1} (1/(z - phi z) - c/j)
    CheckLine check_inv_distance(const GL2K& g, const OmegaPoint& P) const;
    CheckLine check_false_eisenstein_transform(const TExpansion& E, const GL2K& g,
                                               const OmegaPoint& P) const;
    CheckLine check_e2_modularity(const NearlyHoloForm& E2, const GL2K& g,
                                  const OmegaPoint& P) const;
    CheckLine check_component_system(const NearlyHoloForm& F, const GL2K& g,
                                     const OmegaPoint& P) const;

    // direct shell-summed Pi^{1-q} E_{q-1}(z), the lattice-sum oracle
    LocalField::Elem eisenstein_shell_sum(const OmegaPoint& P, long long target_val) const;

    // CM vanishing: g1~(zeta) = 0, J(zeta) = 0, Delta~(zeta) != 0, plus a
    // nonvanishing control point
    CheckReport cm_checks(long long series_order, long long target_val) const;

  private:
    LocalField lf_;
    const TExpansionEngine* eng_;
    int root_choice_;
    LocalField::Elem pi_;

    LocalField::Elem t_of(const LocalField::Elem& z) const;
};

}  // namespace dmf

#endif
