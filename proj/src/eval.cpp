#include "dmf/eval.hpp"

#include <cmath>

namespace dmf {

using Elem = LocalField::Elem;

Evaluator::Evaluator(const TExpansionEngine& eng, long long uprec, int root_choice)
    : lf_(eng.field()->p, eng.field()->s, 2, int(eng.field()->q) - 1 > 0 ? int(eng.field()->q) - 1 : 1,
          uprec),
      eng_(&eng),
      root_choice_(root_choice),
      pi_(lf_.zero()) {
    pi_ = lf_.carlitz_period(root_choice_);
}

Elem Evaluator::t_of(const Elem& z) const { return lf_.carlitz_exp(pi_ * z).inverse(); }

OmegaPoint Evaluator::point(const Elem& z) const {
    Elem phiz = lf_.frobenius(z);
    Elem diff = z - phiz;
    if (diff.known_zero()) throw domain_error("point is fixed by phi: not in Omega^phi(M)");
    return OmegaPoint{z, phiz, t_of(z), lf_.im_val(z)};
}

OmegaPoint Evaluator::sample_point(int theta_power, const PolyA& shift) const {
    FqElem zeta(lf_.coeff_field(), lf_.coeff_field()->generator());
    Elem z = lf_.from_coeff(zeta, -(long long)lf_.ram() * theta_power);
    if (!shift.is_zero()) z = z + lf_.embed(shift);
    return point(z);
}

EvalResult Evaluator::eval_texp(const TExpansion& f, const OmegaPoint& P, bool unnormalized) const {
    const Elem& T = P.tz;
    if (T.known_zero()) throw outside_convergence("t(z) vanishes to precision");
    long long vT = T.val();
    if (vT <= 0) throw outside_convergence("|t(z)| >= 1: outside the cusp neighborhood");
    // truncation tail: v_u(a_i T^i) >= i v_T - ram height(a_i); extrapolate
    // the worst ratio seen in the asymptotic window of stored exponents.
    // exact series (finite t-polynomials) have no tail at all.
    const long long no_tail = (1LL << 58);
    long long N = f.prec();
    long long window = std::max<long long>(4, N / 3);
    long long tail_val = f.series.exact() ? no_tail : N * vT;
    f.series.for_each_term([&](long long e, const RatK& c) {
        if (e < window) return;  // computed exactly, no tail impact
        long long h = (long long)lf_.ram() * std::max(0, c.height());
        tail_val = std::min(tail_val, (N * (e * vT - h)) / e);
    });
    if (tail_val <= 0)
        throw outside_convergence("coefficient growth defeats |t(z)|: evaluation diverges");

    Elem acc = lf_.zero();
    Elem pw = lf_.one();
    long long held = 0;
    bool first = true;
    Elem tinv = lf_.zero();
    f.series.for_each_term([&](long long e, const RatK& c) {
        if (first && e < 0) tinv = T.inverse();
        first = false;
        while (held < e) {
            pw = pw * T;
            ++held;
        }
        while (held > e) {
            pw = pw * tinv;
            --held;
        }
        acc = acc + lf_.embed(c) * pw;
    });
    if (unnormalized) {
        long long w = f.weight;
        Elem piw = w >= 0 ? pi_.pow((unsigned long long)w) : pi_.pow((unsigned long long)(-w)).inverse();
        acc = acc * piw;
    }
    return EvalResult{acc.truncated(std::min(acc.prec(), tail_val)), tail_val};
}

EvalResult Evaluator::eval_nhf(const NearlyHoloForm& F, const OmegaPoint& P) const {
    Elem d = pi_ * (P.z - P.phiz);
    if (d.known_zero()) throw domain_error("z - phi(z) vanishes to precision");
    Elem dinv = d.inverse();
    Elem acc = lf_.zero();
    Elem pw = lf_.one();
    long long tail = (1LL << 58);
    for (int i = 0; i <= F.depth(); ++i) {
        if (i) pw = pw * dinv;
        if (F.comp[size_t(i)].series.known_zero() && F.comp[size_t(i)].series.exact()) continue;
        EvalResult r = eval_texp(F.comp[size_t(i)], P);
        tail = std::min(tail, r.tail_val + (i ? pw.val() : 0));
        acc = acc + r.value * pw;
    }
    return EvalResult{acc, tail};
}

Elem Evaluator::act(const GL2K& g, const Elem& z) const {
    Elem num = lf_.embed(g.a) * z + lf_.embed(g.b);
    Elem den = lf_.embed(g.c) * z + lf_.embed(g.d);
    if (den.known_zero()) throw domain_error("matrix action hits the pole");
    return num * den.inverse();
}

Elem Evaluator::j_factor(const GL2K& g, const Elem& z) const {
    return lf_.embed(g.c) * z + lf_.embed(g.d);
}

double Evaluator::abs_logq(const Elem& x) const {
    if (x.known_zero()) return -double(x.prec()) / double(lf_.ram());
    return -double(x.val()) / double(lf_.ram());
}

double Evaluator::rel_err_logq(const Elem& lhs, const Elem& rhs) const {
    Elem diff = lhs - rhs;
    double scale = rhs.known_zero() ? 0.0 : -double(rhs.val()) / lf_.ram();
    return abs_logq(diff) - scale;
}

CheckLine Evaluator::check_inv_distance(const GL2K& g, const OmegaPoint& P) const {
    // 1/(gz - phi(gz)) = j^2 det^{-1} (1/(z - phi z) - c/j)
    Elem gz = act(g, P.z);
    Elem lhs = (gz - lf_.frobenius(gz)).inverse();
    Elem j = j_factor(g, P.z);
    Elem det = lf_.embed(g.det());
    Elem rhs = j * j * det.inverse() * ((P.z - P.phiz).inverse() - lf_.embed(g.c) * j.inverse());
    double err = rel_err_logq(lhs, rhs);
    return CheckLine{"distance reciprocal transformation", err <= -12.0, err};
}

CheckLine Evaluator::check_false_eisenstein_transform(const TExpansion& E, const GL2K& g,
                                                      const OmegaPoint& P) const {
    // E(gz) = j^2 det^{-1} (E(z) - Pi^{-1} c / j)
    OmegaPoint Q = point(act(g, P.z));
    Elem lhs = eval_texp(E, Q).value;
    Elem j = j_factor(g, P.z);
    Elem det = lf_.embed(g.det());
    Elem ez = eval_texp(E, P).value;
    Elem rhs = j * j * det.inverse() * (ez - pi_.inverse() * lf_.embed(g.c) * j.inverse());
    double err = rel_err_logq(lhs, rhs);
    // at stabilizer fixed points both sides are near-cancelling; measure
    // against the natural scale |E(z)| instead
    if (rhs.known_zero() || rhs.val() > ez.val()) err = abs_logq(lhs - rhs) - abs_logq(ez);
    return CheckLine{"false Eisenstein quasi-modularity", err <= -15.0, err};
}

CheckLine Evaluator::check_e2_modularity(const NearlyHoloForm& E2, const GL2K& g,
                                         const OmegaPoint& P) const {
    // E_2(gz) = j^2 det^{-1} E_2(z)
    OmegaPoint Q = point(act(g, P.z));
    Elem lhs = eval_nhf(E2, Q).value;
    Elem j = j_factor(g, P.z);
    Elem det = lf_.embed(g.det());
    Elem rhs = j * j * det.inverse() * eval_nhf(E2, P).value;
    Elem scale = (pi_ * (P.z - P.phiz)).inverse();
    double err = rel_err_logq(lhs, rhs);
    if (rhs.known_zero() || rhs.val() >= scale.val() + 10 * lf_.ram())
        err = abs_logq(lhs - rhs) - abs_logq(scale);
    return CheckLine{"E_2 weight-2 type-1 modularity", err <= -15.0, err};
}

CheckLine Evaluator::check_component_system(const NearlyHoloForm& F, const GL2K& g,
                                            const OmegaPoint& P) const {
    // f_{r-i}(gz) = j^{k-2(r-i)} det^{-m+r-i} sum_j binom(r-i+j, j) J^j f_{r-i+j}(z)
    // with J = Pi^{-1} c / j(g; z)
    int r = F.depth();
    long long k = F.weight;
    int m = F.type ? *F.type : 0;
    OmegaPoint Q = point(act(g, P.z));
    Elem j = j_factor(g, P.z);
    Elem det = lf_.embed(g.det());
    Elem J = pi_.inverse() * lf_.embed(g.c) * j.inverse();
    double worst = -1e9;
    int p = lf_.base_field()->p;
    for (int i = 0; i <= r; ++i) {
        int l = r - i;
        Elem lhs = eval_texp(F.comp[size_t(l)], Q).value;
        Elem sum = lf_.zero();
        Elem Jp = lf_.one();
        for (int jj = 0; jj <= i; ++jj) {
            long long bc = binom_mod_p(l + jj, jj, p);
            if (bc) sum = sum + lf_.from_coeff(FqElem(lf_.coeff_field(), lf_.coeff_field()->from_int(bc))) *
                                Jp * eval_texp(F.comp[size_t(l + jj)], P).value;
            Jp = Jp * J;
        }
        long long expnt = k - 2 * l;
        Elem jpow = expnt >= 0 ? j.pow((unsigned long long)expnt)
                               : j.pow((unsigned long long)(-expnt)).inverse();
        long long dexp = -(long long)m + l;
        Elem dpow = dexp >= 0 ? det.pow((unsigned long long)dexp)
                              : det.pow((unsigned long long)(-dexp)).inverse();
        Elem rhs = jpow * dpow * sum;
        double err = rel_err_logq(lhs, rhs);
        if (rhs.known_zero()) err = abs_logq(lhs - rhs);
        worst = std::max(worst, err);
    }
    return CheckLine{"component transformation system", worst <= -12.0, worst};
}

Elem Evaluator::eisenstein_shell_sum(const OmegaPoint& P, long long target_val) const {
    // Pi^{1-q} E_{q-1}(z) by direct lattice summation:
    //   E_{q-1}(z) = sum_{b != 0} b^{1-q} + sum_{a != 0} sum_b (az+b)^{1-q},
    // with the inner sum collapsed through the finite-lattice partial-fraction
    // identity sum_{deg b < B} (w-b)^{-1} = 1/e_B(w).
    unsigned long long q1 = lf_.q() - 1;
    // zeta part: -sum over monic b of b^{1-q}, shells until increments sink
    Elem zpart = lf_.zero();
    for (int e = 0;; ++e) {
        Elem inc = lf_.zero();
        std::vector<uint32_t> tail(size_t(e), 0);
        while (true) {
            PolyA b = PolyA::monic(lf_.base_field(), e, tail);
            inc = inc + lf_.embed(b).pow(q1).inverse();
            int i = 0;
            for (; i < e; ++i) {
                if (tail[size_t(i)] + 1 < lf_.base_field()->card) {
                    ++tail[size_t(i)];
                    break;
                }
                tail[size_t(i)] = 0;
            }
            if (i == e) break;
        }
        zpart = zpart - inc;  // sum over c in F_q^x of c^{1-q} = q-1 = -1
        if (e >= 1 && (inc.known_zero() || inc.val() > target_val + 2 * lf_.ram())) break;
        if (e > 64) throw precision_exhausted("zeta shell sum did not converge");
    }
    // a part: -sum over monic a of lim_B e_B(az)^{1-q}; the tower over
    // V_k = {deg b < k} collapses adaptively, its corrections explode in
    // valuation after a few steps
    auto collapsed = [&](const Elem& w) {
        const int max_dim = 24;
        std::vector<Elem> gens;
        for (int j = 0; j < max_dim; ++j)
            gens.push_back(lf_.embed(PolyA::theta(lf_.base_field()).pow(uint64_t(j))));
        Elem ev = w;
        for (int k = 0; k < max_dim; ++k) {
            Elem u = gens[size_t(k)];
            Elem c = u.pow(q1).inverse();
            Elem corr = ev.frob() * c;
            long long corr_gap = corr.known_zero() ? (1LL << 40) : corr.val() - ev.val();
            ev = ev - corr;
            for (int j = k + 1; j < max_dim; ++j)
                gens[size_t(j)] = gens[size_t(j)] - gens[size_t(j)].frob() * c;
            if (corr_gap > target_val + 4 * lf_.ram()) break;
            if (k == max_dim - 1) throw precision_exhausted("b-shell tower did not converge");
        }
        return ev.pow(q1).inverse();
    };
    Elem apart = lf_.zero();
    for (int e = 0;; ++e) {
        Elem inc = lf_.zero();
        std::vector<uint32_t> tail(size_t(e), 0);
        while (true) {
            PolyA a = PolyA::monic(lf_.base_field(), e, tail);
            inc = inc + collapsed(lf_.embed(a) * P.z);
            int i = 0;
            for (; i < e; ++i) {
                if (tail[size_t(i)] + 1 < lf_.base_field()->card) {
                    ++tail[size_t(i)];
                    break;
                }
                tail[size_t(i)] = 0;
            }
            if (i == e) break;
        }
        apart = apart - inc;
        if (e >= 1 && (inc.known_zero() || inc.val() > target_val + 2 * lf_.ram())) break;
        if (e > 16) throw precision_exhausted("a shell sum did not converge");
    }
    Elem total = zpart + apart;
    return total * pi_.pow(q1).inverse();
}

CheckReport Evaluator::cm_checks(long long series_order, long long target_val) const {
    CheckReport rep;
    const FqField* Fq2 = lf_.coeff_field();
    FqElem zeta(Fq2, Fq2->generator());
    OmegaPoint P = point(lf_.from_coeff(zeta));
    double tol = -double(target_val);

    auto g1 = eng_->coefficient_forms(series_order);
    EvalResult g1v = eval_texp(g1.first, P);
    rep.lines.push_back(
        {"g1~(zeta) vanishes", abs_logq(g1v.value) <= tol, abs_logq(g1v.value)});

    TExpansion J = eng_->j_function(series_order);
    EvalResult Jv = eval_texp(J, P);
    rep.lines.push_back({"J(zeta) vanishes", abs_logq(Jv.value) <= tol, abs_logq(Jv.value)});

    EvalResult dv = eval_texp(g1.second, P);
    rep.lines.push_back(
        {"Delta~(zeta) is nonzero", abs_logq(dv.value) > tol, abs_logq(dv.value)});

    // control point zeta theta: the tau-coefficient must not vanish there
    OmegaPoint Q = sample_point(1, PolyA::zero(eng_->field()));
    EvalResult g1c = eval_texp(g1.first, Q);
    rep.lines.push_back(
        {"g1~ at a non-CM point is nonzero", abs_logq(g1c.value) > tol, abs_logq(g1c.value)});
    return rep;
}

}  // namespace dmf
