#include "dmf/nhf.hpp"

namespace dmf {

bool NearlyHoloForm::is_zero() const {
    for (const auto& f : comp)
        if (!f.series.known_zero()) return false;
    return true;
}

void NearlyHoloForm::trim() {
    while (comp.size() > 1 && comp.back().series.known_zero()) comp.pop_back();
}

NearlyHoloForm NearlyHoloForm::from_parts(long long weight, std::optional<int> type,
                                          std::vector<TExpansion> comps) {
    NearlyHoloForm F;
    F.weight = weight;
    F.type = type;
    F.comp = std::move(comps);
    if (F.comp.empty()) throw domain_error("a nearly holomorphic form needs at least one component");
    F.trim();
    return F;
}

NearlyHoloForm nhf_from_texp(const TExpansion& f) {
    return NearlyHoloForm::from_parts(f.weight, f.type, {f});
}

NearlyHoloForm nhf_add(const NearlyHoloForm& a, const NearlyHoloForm& b) {
    if (a.weight != b.weight && !a.is_zero() && !b.is_zero())
        throw weight_violation("adding forms of different weights");
    NearlyHoloForm r;
    r.weight = a.is_zero() ? b.weight : a.weight;
    if (a.type && b.type && *a.type == *b.type) r.type = a.type;
    size_t n = std::max(a.comp.size(), b.comp.size());
    const RatK proto = a.comp.front().series.proto();
    for (size_t i = 0; i < n; ++i) {
        TExpansion zero(KSeries::zero(proto), r.weight - 2 * (long long)i, std::nullopt);
        const TExpansion& fa = i < a.comp.size() ? a.comp[i] : zero;
        const TExpansion& fb = i < b.comp.size() ? b.comp[i] : zero;
        r.comp.push_back(texp_add(fa, fb));
    }
    r.trim();
    return r;
}

NearlyHoloForm nhf_mul(const NearlyHoloForm& a, const NearlyHoloForm& b) {
    NearlyHoloForm r;
    r.weight = a.weight + b.weight;
    uint32_t qq = a.comp.front().series.proto().field()->q;
    if (a.type && b.type) r.type = type_mod(*a.type + *b.type, qq);
    const RatK proto = a.comp.front().series.proto();
    size_t n = a.comp.size() + b.comp.size() - 1;
    for (size_t i = 0; i < n; ++i)
        r.comp.push_back(TExpansion(KSeries::zero(proto), r.weight, std::nullopt));
    for (size_t i = 0; i < a.comp.size(); ++i)
        for (size_t j = 0; j < b.comp.size(); ++j) {
            TExpansion prod = texp_mul(a.comp[i], b.comp[j]);
            r.comp[i + j] = TExpansion(r.comp[i + j].series + prod.series, r.weight, r.comp[i + j].type);
        }
    r.trim();
    return r;
}

NearlyHoloForm nhf_scale(const NearlyHoloForm& a, const RatK& c) {
    NearlyHoloForm r = a;
    for (auto& f : r.comp) f = texp_scale(f, c);
    return r;
}

bool nhf_equal(const NearlyHoloForm& a, const NearlyHoloForm& b, long long N) {
    size_t n = std::max(a.comp.size(), b.comp.size());
    const RatK proto = a.comp.front().series.proto();
    KSeries zero = KSeries::zero(proto);
    for (size_t i = 0; i < n; ++i) {
        const KSeries& fa = i < a.comp.size() ? a.comp[i].series : zero;
        const KSeries& fb = i < b.comp.size() ? b.comp[i].series : zero;
        if (!KSeries::agree_to(fa, fb, N)) return false;
    }
    return true;
}

NearlyHoloForm e2_form(const TExpansionEngine& eng, long long N) {
    TExpansion e = eng.false_eisenstein(N, ERoute::logderiv);
    TExpansion minus_one(KSeries::monomial(RatK::from_int(eng.field(), -1), 0), 0, 0);
    return NearlyHoloForm::from_parts(2, 1, {e, minus_one});
}

std::vector<TExpansion> decompose_e2(const TExpansionEngine& eng, const NearlyHoloForm& F) {
    int r = F.depth();
    if (2 * (long long)r > F.weight && !F.is_zero())
        throw weight_violation("depth exceeds weight/2: not in the modular regime");
    // E_2^j has top component (-1)^j at depth j, so peel from the top:
    // g_r = (-1)^r f_r, subtract g_r E_2^r, recurse.
    long long N = F.comp.front().prec();
    for (const auto& f : F.comp) N = std::min(N, f.prec());
    if (r >= 1 && N >= KSeries::exact_prec)
        throw precision_exhausted("structure decomposition needs truncated components");
    NearlyHoloForm cur = F;
    NearlyHoloForm e2 = e2_form(eng, N);
    std::vector<TExpansion> gs;
    for (int j = r; j >= 1; --j) {
        if (j > cur.depth()) {
            gs.push_back(TExpansion(KSeries::zero(F.comp.front().series.proto(), N),
                                    F.weight - 2 * (long long)j, std::nullopt));
            continue;
        }
        TExpansion gj = cur.comp[size_t(j)];
        if (j % 2) gj = texp_neg(gj);
        gj = TExpansion(gj.series, F.weight - 2 * (long long)j,
                        F.type ? std::optional<int>(type_mod(*F.type - j, eng.q())) : std::nullopt);
        gs.push_back(gj);
        NearlyHoloForm pw = nhf_from_texp(gj);
        for (int i = 0; i < j; ++i) pw = nhf_mul(pw, e2);
        // cur -= g_j E_2^j; the depth-j component cancels exactly
        NearlyHoloForm neg = nhf_scale(pw, RatK::from_int(eng.field(), -1));
        cur = nhf_add(cur, neg);
        if (cur.depth() >= j) {
            if (!cur.comp[size_t(j)].series.known_zero())
                throw route_mismatch("structure peel left a nonzero top component");
            cur.comp.erase(cur.comp.begin() + j, cur.comp.end());
            cur.trim();
        }
    }
    gs.push_back(TExpansion(cur.comp[0].series, F.weight,
                            F.type ? std::optional<int>(type_mod(*F.type, eng.q())) : std::nullopt));
    std::reverse(gs.begin(), gs.end());  // gs[j] multiplies E_2^j
    return gs;
}

NearlyHoloForm compose_e2(const TExpansionEngine& eng, const std::vector<TExpansion>& gs,
                          long long weight, long long N) {
    NearlyHoloForm e2 = e2_form(eng, N);
    const RatK proto = RatK::zero(eng.field());
    NearlyHoloForm acc =
        NearlyHoloForm::from_parts(weight, std::nullopt, {TExpansion(KSeries::zero(proto), weight, std::nullopt)});
    NearlyHoloForm pw = NearlyHoloForm::from_parts(
        0, 0, {TExpansion(KSeries::one(proto, N), 0, 0)});
    for (size_t j = 0; j < gs.size(); ++j) {
        if (j) pw = nhf_mul(pw, e2);
        if (gs[j].series.known_zero()) continue;
        NearlyHoloForm term = nhf_mul(nhf_from_texp(gs[j]), pw);
        term.weight = weight;
        acc = nhf_add(acc, term);
    }
    acc.weight = weight;
    return acc;
}

NearlyHoloForm maass_shimura(const HyperDerivTable& tab, const TExpansion& f, int r) {
    if (r == 0) return nhf_from_texp(f);
    return maass_shimura_nhf(tab, nhf_from_texp(f), r);
}

NearlyHoloForm maass_shimura_nhf(const HyperDerivTable& tab, const NearlyHoloForm& F, int r) {
    if (r == 0) return F;
    const RatK proto = F.comp.front().series.proto();
    const FqField* fld = proto.field();
    int p = fld->p;
    long long k = F.weight;
    NearlyHoloForm out;
    out.weight = k + 2 * r;
    out.type = F.type ? std::optional<int>(type_mod(*F.type + r, fld->q)) : std::nullopt;
    size_t depth_bound = F.comp.size() + size_t(r);
    long long N = F.comp.front().prec();
    for (const auto& f : F.comp) N = std::min(N, f.prec());
    for (size_t i = 0; i < depth_bound; ++i)
        out.comp.push_back(TExpansion(KSeries::zero(proto, N - r), out.weight, std::nullopt));
    for (size_t mu = 0; mu < F.comp.size(); ++mu) {
        const TExpansion& f = F.comp[mu];
        if (f.series.known_zero() && f.series.exact()) continue;
        for (int i = 0; i <= r; ++i) {
            long long bc = binom_mod_p(k - (long long)mu + r - 1, i, p);
            if (!bc) continue;
            TExpansion df = hyperderivative(tab, f, r - i);
            KSeries term = df.series.scaled(RatK::from_int(fld, bc));
            size_t slot = mu + size_t(i);
            out.comp[slot] = TExpansion(out.comp[slot].series + term, out.weight, out.comp[slot].type);
        }
    }
    out.trim();
    return out;
}

}  // namespace dmf
