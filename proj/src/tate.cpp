#include "dmf/tate.hpp"

namespace dmf {

namespace {
using XSeries = TateModule::XSeries;

// all b in A of exact degree e (nonzero leading coefficient)
void elements_of_degree(const FqField* F, int e, std::vector<PolyA>& out) {
    std::vector<uint32_t> c(size_t(e) + 1, 0);
    c[size_t(e)] = 1;
    while (true) {
        if (c[size_t(e)] != 0) out.push_back(PolyA(F, c));
        int i = 0;
        for (; i <= e; ++i) {
            if (c[size_t(i)] + 1 < F->card) {
                ++c[size_t(i)];
                break;
            }
            c[size_t(i)] = 0;
        }
        if (i > e) break;
    }
}
}  // namespace

TateModule TateModule::build(const FqField* F, long long NX) {
    if (NX < (long long)F->q) throw domain_error("N_X must be at least q");
    TateModule T;
    T.F_ = F;
    T.NX_ = NX;
    const RatK rzero = RatK::zero(F);
    const XSeries proto = XSeries::zero(rzero);
    DrinfeldModule<RatK> C = carlitz(F);
    const XSeries inv_x = XSeries::monomial(RatK::one(F), -1);

    // lattice sample: C_b(1/X) for q^{deg b} <= N_X
    auto lattice_elem = [&](const PolyA& b) {
        TwistedPoly<RatK> cb = C.of(b);
        XSeries s = XSeries::zero(rzero);
        long long qi = 1;
        for (int i = 0; i <= cb.degree(); ++i, qi *= F->q) {
            if (!cb.coeff(i).is_zero()) s = s + XSeries::monomial(cb.coeff(i), -qi);
        }
        return s;
    };

    // shells 0..B with q^B <= N_X < q^{B+1}
    int B = 0;
    for (long long qe = (long long)F->q; qe <= NX; qe *= F->q) ++B;
    T.shells_ = B + 1;
    for (int e = 0; e <= B; ++e) {
        std::vector<PolyA> bs;
        elements_of_degree(F, e, bs);
        for (const PolyA& b : bs) T.lattice_.push_back(lattice_elem(b));
    }

    // exponential by F_q-subspace towers: adding a basis vector w turns
    // e_V into e_V - e_V^q / e_V(w)^{q-1}, i.e. (1 - u^{1-q} tau) * e_V
    long long guard = NX + 2;
    TwistedSeries<XSeries> e(proto, B + 3);
    e.set_coeff(0, XSeries::one(rzero, guard));
    for (int sh = 0; sh <= B; ++sh) {
        XSeries w = lattice_elem(PolyA::theta(F).pow(uint64_t(sh)));
        XSeries u = e.apply(w);
        XSeries c = u.pow((unsigned long long)(F->q - 1)).inverse();
        TwistedPoly<XSeries> step(proto, {XSeries::one(rzero, guard), -c});
        e = e.poly_times(step);
    }
    T.exp_ = e;

    // phi_theta = e C_theta e^{-1}, exactly tau-degree 2 up to X-precision
    TwistedPoly<XSeries> ctheta(proto,
                                {ring_theta(proto), XSeries::one(rzero, guard)});
    TwistedSeries<XSeries> phi = e.times_poly(ctheta) * e.inverse();
    for (int i = 3; i <= phi.order(); ++i) {
        if (!phi.coeff(i).truncated(NX).known_zero())
            throw non_linear_residue("Tate module not rank 2 to X-precision");
    }
    T.phi_theta_ = TwistedPoly<XSeries>(
        proto, {phi.coeff(0).truncated(NX), phi.coeff(1).truncated(NX), phi.coeff(2).truncated(NX)});
    T.g1_ = T.phi_theta_.coeff(1);
    T.g2_ = T.phi_theta_.coeff(2);

    // cusp degeneration: partial = theta, g1(0) = 1, g2 = 0 mod X
    if (!(T.phi_theta_.coeff(0).coeff(0) == RatK::theta(F)))
        throw cross_check_failure("Tate partial is not theta");
    if (!(T.g1_.coeff(0) == RatK::one(F)))
        throw cross_check_failure("Tate g1 does not degenerate to the Carlitz coefficient");
    if (!T.g2_.coeff(0).is_zero())
        throw cross_check_failure("Tate g2 does not vanish at the cusp");
    return T;
}

TateModule::XSeries TateModule::top_coeff(const PolyA& a) const {
    if (a.degree() < 1) throw domain_error("top coefficient needs a non-constant a");
    DrinfeldModule<XSeries> phi{2, phi_theta_};
    TwistedPoly<XSeries> pa = phi.of(a);
    return pa.coeff(2 * a.degree());
}

TateModule::XSeries TateModule::cusp_false_eisenstein(const PolyA& a) const {
    XSeries g = top_coeff(a);
    XSeries num = g.derivative().shifted(2);  // X^2 dg/dX
    return -(num * g.inverse());
}

TateModule::XSeries TateModule::cusp_false_eisenstein() const {
    return cusp_false_eisenstein(PolyA::theta(F_));
}

std::vector<LaurentSeries<RatK>> DeRhamCuspBasis::to_eta(
    const std::vector<LaurentSeries<RatK>>& f) const {
    const int p = e_mu.proto().field()->p;
    std::vector<LaurentSeries<RatK>> h;
    size_t r = f.size();
    for (size_t j = 0; j < r; ++j) {
        LaurentSeries<RatK> acc = LaurentSeries<RatK>::zero(e_mu.proto(), e_mu.prec());
        LaurentSeries<RatK> epow = LaurentSeries<RatK>::one(e_mu.proto(), e_mu.prec());
        for (size_t l = j; l < r; ++l) {
            long long bc = binom_mod_p((long long)l, (long long)j, p);
            if (bc) {
                LaurentSeries<RatK> term = f[l] * epow;
                acc = acc + term.scaled(RatK::from_int(e_mu.proto().field(), bc));
            }
            epow = epow * e_mu;
        }
        h.push_back(acc);
    }
    return h;
}

std::vector<LaurentSeries<RatK>> DeRhamCuspBasis::from_eta(
    const std::vector<LaurentSeries<RatK>>& h) const {
    DeRhamCuspBasis neg{-e_mu};
    return neg.to_eta(h);
}

}  // namespace dmf
