#include "dmf/texp.hpp"

#include <sstream>

namespace dmf {

int type_mod(long long v, uint32_t q) {
    long long md = (long long)q - 1;
    if (md <= 0) return 0;
    long long r = v % md;
    if (r < 0) r += md;
    return int(r);
}

TExpansion texp_mul(const TExpansion& a, const TExpansion& b) {
    std::optional<int> ty;
    if (a.type && b.type) {
        uint32_t q = a.series.proto().field()->q;
        ty = type_mod(*a.type + *b.type, q);
    }
    return TExpansion(a.series * b.series, a.weight + b.weight, ty);
}

TExpansion texp_add(const TExpansion& a, const TExpansion& b) {
    if (a.series.known_zero() && a.series.exact()) return b;
    if (b.series.known_zero() && b.series.exact()) return a;
    std::optional<int> ty;
    if (a.type && b.type && *a.type == *b.type) ty = a.type;
    return TExpansion(a.series + b.series, a.weight, ty);
}

TExpansion texp_scale(const TExpansion& a, const RatK& c) {
    return TExpansion(a.series.scaled(c), a.weight, a.type);
}

TExpansion texp_neg(const TExpansion& a) {
    return TExpansion(-a.series, a.weight, a.type);
}

KSeries GossPoly::eval_series(const KSeries& s) const {
    const RatK proto = s.proto();
    KSeries acc = KSeries::zero(proto, s.prec());
    KSeries pw = KSeries::one(proto, s.prec());
    int held = 0;  // pw = s^held
    for (int j = 1; j <= degree(); ++j) {
        if (coeffs[size_t(j)].is_zero()) continue;
        while (held < j) {
            pw = pw * s;
            ++held;
        }
        acc = acc + pw.scaled(coeffs[size_t(j)]);
    }
    return acc;
}

std::string GossPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 1; --j) {
        if (coeffs[size_t(j)].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!coeffs[size_t(j)].is_one()) os << "(" << coeffs[size_t(j)].to_string() << ")*";
        os << "X";
        if (j > 1) os << "^" << j;
    }
    if (first) return "0";
    return os.str();
}

TExpansionEngine::TExpansionEngine(const FqField* F) : F_(F) {
    if (F->m != 1) throw field_error("expansion engine needs the base field F_q");
    beta_.push_back(RatK::one(F));   // beta_0 = 1
    dfact_.push_back(RatK::one(F));  // D_0 = 1
}

RatK TExpansionEngine::carlitz_factorial(int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (int(dfact_.size()) <= i) {
        int j = int(dfact_.size());
        // D_j = (theta^{q^j} - theta) D_{j-1}^q
        RatK bracket = RatK(PolyA::theta(F_).frob_power(j) - PolyA::theta(F_));
        dfact_.push_back(bracket * dfact_.back().frob_power(1));
    }
    return dfact_[size_t(i)];
}

RatK TExpansionEngine::carlitz_exp_coeff(int i) const {
    std::lock_guard<std::mutex> lock(mu_);
    while (int(beta_.size()) <= i) {
        int j = int(beta_.size());
        RatK bracket = RatK(PolyA::theta(F_).frob_power(j) - PolyA::theta(F_));
        beta_.push_back(beta_.back().frob_power(1) * bracket.inverse());
    }
    return beta_[size_t(i)];
}

GossPoly TExpansionEngine::goss_poly(int k) const {
    if (k < 1) throw domain_error("Goss polynomial index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = goss_.find(k);
        if (it != goss_.end()) return it->second;
    }
    // G_1 = X; G_k = X (G_{k-1} + sum_{i >= 1, q^i <= k-1} beta_i G_{k-q^i})
    std::vector<GossPoly> gs;
    gs.push_back(GossPoly{1, {RatK::zero(F_), RatK::one(F_)}});
    for (int kk = 2; kk <= k; ++kk) {
        std::vector<RatK> acc(size_t(kk) + 1, RatK::zero(F_));
        auto add_scaled = [&](const GossPoly& g, const RatK& c) {
            for (int j = 0; j <= g.degree(); ++j) {
                if (g.coeffs[size_t(j)].is_zero()) continue;
                acc[size_t(j) + 1] += g.coeffs[size_t(j)] * c;
            }
        };
        add_scaled(gs[size_t(kk - 2)], RatK::one(F_));
        long long qi = q();
        for (int i = 1; qi <= kk - 1; ++i, qi *= q())
            add_scaled(gs[size_t(kk - qi - 1)], carlitz_exp_coeff(i));
        while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
        gs.push_back(GossPoly{kk, std::move(acc)});
    }
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& g : gs) goss_.emplace(g.k, g);
    return goss_.at(k);
}

KSeries TExpansionEngine::reexpand_scaled(const PolyA& a, long long N) const {
    if (a.is_zero()) throw domain_error("t(az) needs a != 0");
    TwistedPoly<RatK> ca = carlitz(F_).of(a);
    // C_a(1/t) as an exact Laurent polynomial in t
    KSeries s = KSeries::zero(RatK::zero(F_));
    long long qi = 1;
    for (int i = 0; i <= ca.degree(); ++i, qi *= q()) {
        if (!ca.coeff(i).is_zero()) s = s + KSeries::monomial(ca.coeff(i), -qi);
    }
    long long qd = 1;
    for (int i = 0; i < a.degree(); ++i) qd *= q();
    long long sprec = std::max(N - 2 * qd, 1 - qd);
    return s.truncated(sprec).inverse().truncated(N);
}

KSeries TExpansionEngine::expansion_of_one_over_carlitz_exp(long long N) const {
    // 1/e_C(z) as a Laurent series in z with K coefficients
    KSeries ec = KSeries::zero(RatK::zero(F_));
    long long qj = 1;
    for (int j = 0; qj <= N + 2; ++j, qj *= q())
        ec = ec + KSeries::monomial(carlitz_exp_coeff(j), qj);
    return ec.truncated(N + 2).inverse().truncated(N);
}

RatK TExpansionEngine::zeta_normalized(int k) const {
    if (k < 1) throw domain_error("zeta index must be >= 1");
    if (q() > 2 && k % int(q() - 1) != 0) return RatK::zero(F_);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = zeta_.find(k);
        if (it != zeta_.end()) return it->second;
    }
    // sum_{0 != lambda in Pi A} lambda^{-k} = (-1)^k [z^0]( G_k(1/e_C(z)) - z^{-k} ),
    // reading off sum_{lambda != 0} (z - lambda)^{-k} at z = 0.
    GossPoly g = goss_poly(k);
    KSeries inv_e = expansion_of_one_over_carlitz_exp((long long)k + 2);
    KSeries lhs = g.eval_series(inv_e) - KSeries::monomial(RatK::one(F_), -(long long)k);
    RatK v = lhs.coeff(0);
    if (k % 2) v = -v;
    std::lock_guard<std::mutex> lock(mu_);
    zeta_.emplace(k, v);
    return v;
}

namespace {
void monic_of_degree(const FqField* F, int e, std::vector<PolyA>& out) {
    std::vector<uint32_t> tail(size_t(e), 0);
    while (true) {
        out.push_back(PolyA::monic(F, e, tail));
        int i = 0;
        for (; i < e; ++i) {
            if (tail[size_t(i)] + 1 < F->card) {
                ++tail[size_t(i)];
                break;
            }
            tail[size_t(i)] = 0;
        }
        if (i == e) break;
    }
}
}  // namespace

TExpansion TExpansionEngine::eisenstein(int k, long long N) const {
    if (q() > 2 && k % int(q() - 1) != 0)
        return TExpansion(KSeries::zero(RatK::zero(F_), N), k, type_mod(k, q()));
    // Pi^{-k} E_k = zeta~(k) - sum over monic m of G_k(t(mz))
    GossPoly g = goss_poly(k);
    KSeries acc = KSeries::monomial(zeta_normalized(k), 0, N);
    for (int e = 0;; ++e) {
        long long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q();
        if (qe > N) break;  // G_k(t(mz)) starts at order >= q^{deg m}
        std::vector<PolyA> ms;
        monic_of_degree(F_, e, ms);
        for (const PolyA& m : ms) {
            KSeries tm = reexpand_scaled(m, N);
            acc = acc - g.eval_series(tm);
        }
    }
    return TExpansion(acc.truncated(N), k, 0);
}

std::pair<TExpansion, TExpansion> TExpansionEngine::coefficient_forms(long long N) const {
    // phi^{Y_z}_theta = theta + g_1 tau + g_2 tau^2 solved from
    //   a E_{q^i-1} = sum_{l=0}^{i} E_{q^l-1} (g_{i-l,a})^{q^l},  E_0 := -1, g_0 := a,
    // in the arithmetic normalization g~_i = Pi^{1-q^i} g_{i,theta}.
    const RatK aK = RatK::theta(F_);
    {
        // i = 0 instance is the convention self-check: -a = -g_0
        RatK lhs = aK * RatK::from_int(F_, -1);
        RatK rhs = RatK::from_int(F_, -1) * aK;
        if (lhs != rhs) throw inconsistent_convention("E_0 = -1 convention failed at i = 0");
    }
    int qq = int(q());
    TExpansion e1 = eisenstein(qq - 1, N);
    TExpansion e2 = eisenstein(qq * qq - 1, N);
    // g~_1 = (theta^q - theta) E~_{q-1}
    RatK bracket1 = RatK(PolyA::theta(F_).frob_power(1) - PolyA::theta(F_));
    KSeries g1 = e1.series.scaled(bracket1);
    // g~_2 = E~_{q-1} (g~_1)^{(q)} + (theta^{q^2} - theta) E~_{q^2-1}
    RatK bracket2 = RatK(PolyA::theta(F_).frob_power(2) - PolyA::theta(F_));
    KSeries g2 = e1.series * g1.frob() + e2.series.scaled(bracket2);
    return {TExpansion(g1.truncated(N), qq - 1, 0),
            TExpansion(g2.truncated(N), (long long)qq * qq - 1, 0)};
}

TExpansion TExpansionEngine::delta(long long N, DeltaRoute route) const {
    if (route == DeltaRoute::product) return delta_product(N);
    TExpansion d = coefficient_forms(N).second;
    if (route == DeltaRoute::both) {
        TExpansion p = delta_product(N);
        if (!KSeries::agree_to(d.series, p.series, std::min(d.prec(), p.prec())))
            throw route_mismatch("delta: recursion and product expansions differ");
    }
    return d;
}

TExpansionEngine::DeltaProductShape TExpansionEngine::delta_product_shape() const {
    long long probe = 2 * (long long)q();
    TExpansion d = coefficient_forms(probe).second;
    if (d.series.known_zero()) throw precision_exhausted("delta probe too short");
    DeltaProductShape s{d.series.val(), d.series.leading()};
    if (s.t_exponent != (long long)q() - 1) throw route_mismatch("delta lowest order is not q-1");
    if (!s.leading.is_integral() || s.leading.num().degree() != 0)
        throw route_mismatch("delta leading coefficient is not an F_q constant");
    return s;
}

TExpansion TExpansionEngine::delta_product(long long N) const {
    // Pi^{1-q^2} Delta_theta = c t^k prod over monic m, deg m >= 1, of
    //   P_m(t)^{(q^2-1)(q-1)},   P_m(t) = C_m(1/t) t^{q^{deg m}},
    // with c and k read off from the recursion route. A single monic of
    // degree e first contributes at t-order q^{e-1}(q-1).
    DeltaProductShape shape = delta_product_shape();
    unsigned long long outer = (unsigned long long)(q() * q() - 1) * (q() - 1);
    KSeries acc = KSeries::monomial(shape.leading, shape.t_exponent, N + shape.t_exponent);
    DrinfeldModule<RatK> C = carlitz(F_);
    auto factor_for = [&](const PolyA& m) {
        TwistedPoly<RatK> cm = C.of(m);
        long long qe = 1;
        for (int i = 0; i < m.degree(); ++i) qe *= q();
        KSeries pm = KSeries::zero(RatK::zero(F_));
        long long qi = 1;
        for (int i = 0; i <= cm.degree(); ++i, qi *= q()) {
            if (!cm.coeff(i).is_zero()) pm = pm + KSeries::monomial(cm.coeff(i), qe - qi);
        }
        return pm.truncated(N).pow(outer).truncated(N);
    };
    int maxdeg = 0;
    for (int e = 1;; ++e) {
        long long lowest = (long long)(q() - 1);
        for (int i = 0; i < e - 1; ++i) lowest *= q();
        if (lowest >= N) {
            maxdeg = e - 1;
            break;
        }
        std::vector<PolyA> ms;
        monic_of_degree(F_, e, ms);
        for (const PolyA& m : ms) acc = (acc * factor_for(m)).truncated(N + shape.t_exponent);
    }
    // shell bound self-check: the first excluded degree must not touch order < N
    if (maxdeg >= 1) {
        PolyA probe = PolyA::theta(F_).pow(uint64_t(maxdeg) + 1);
        if (!(factor_for(probe) == KSeries::one(RatK::zero(F_), N)))
            throw precision_exhausted("delta product shell bound miscomputed");
    }
    return TExpansion(acc.truncated(N), (long long)q() * q() - 1, 0);
}

TExpansion TExpansionEngine::false_eisenstein(long long N, ERoute route) const {
    std::optional<KSeries> logderiv, monicsum;
    if (route == ERoute::logderiv || route == ERoute::both) {
        TExpansion d = coefficient_forms(N + 2 * (long long)q()).second;
        KSeries num = d.series.derivative().shifted(2);         // t^2 dDelta/dt
        logderiv = (-(num * d.series.inverse())).truncated(N);  // -t^2 (log Delta)'
    }
    if (route == ERoute::monicsum || route == ERoute::both) {
        KSeries acc = KSeries::zero(RatK::zero(F_), N);
        for (int e = 0;; ++e) {
            long long qe = 1;
            for (int i = 0; i < e; ++i) qe *= q();
            if (qe > N) break;  // t(mz) starts at order q^{deg m}
            std::vector<PolyA> ms;
            monic_of_degree(F_, e, ms);
            for (const PolyA& m : ms) acc = acc + reexpand_scaled(m, N).scaled(RatK(m));
        }
        monicsum = acc.truncated(N);
    }
    if (logderiv && monicsum) {
        if (!KSeries::agree_to(*logderiv, *monicsum, std::min(logderiv->prec(), monicsum->prec())))
            throw route_mismatch("false Eisenstein: log-derivative and monic-sum routes differ");
    }
    return TExpansion(logderiv ? *logderiv : *monicsum, 2, 1);
}

TExpansion TExpansionEngine::j_function(long long N) const {
    long long margin = N + 2 * (long long)(q() - 1) + 2;
    auto [g1, d] = coefficient_forms(margin);
    KSeries num = g1.series.pow((unsigned long long)q() + 1);
    KSeries jf = (num * d.series.inverse()).truncated(N);
    return TExpansion(jf, 0, 0);
}

}  // namespace dmf
