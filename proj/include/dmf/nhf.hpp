#ifndef DMF_NHF_HPP
#define DMF_NHF_HPP

#include "dmf/hyperderiv.hpp"

namespace dmf {

// Nearly holomorphic form F = sum_{i=0}^{r} f_i / (Pi z - Pi phi(z))^i as the
// component vector (f_0, ..., f_r) of arithmetic t-expansions. Weight k and
// depth r satisfy 2r <= k for forms in the modular regime; type is optional
// because sums across types are legitimate component vectors.
struct NearlyHoloForm {
    long long weight = 0;
    std::optional<int> type;
    std::vector<TExpansion> comp;

    int depth() const { return int(comp.size()) - 1; }
    const TExpansion& component(int i) const { return comp.at(size_t(i)); }
    bool is_zero() const;
    void trim();

    static NearlyHoloForm from_parts(long long weight, std::optional<int> type,
                                     std::vector<TExpansion> comps);
};

NearlyHoloForm nhf_from_texp(const TExpansion& f);
NearlyHoloForm nhf_add(const NearlyHoloForm& a, const NearlyHoloForm& b);
NearlyHoloForm nhf_mul(const NearlyHoloForm& a, const NearlyHoloForm& b);
NearlyHoloForm nhf_scale(const NearlyHoloForm& a, const RatK& c);
bool nhf_equal(const NearlyHoloForm& a, const NearlyHoloForm& b, long long N);

// E_2 = E - 1/(Pi z - Pi phi(z)): components (E, -1), weight 2, type 1, depth 1
NearlyHoloForm e2_form(const TExpansionEngine& eng, long long N);

// structure decomposition F = sum_j g_j E_2^j (peel from the top)
std::vector<TExpansion> decompose_e2(const TExpansionEngine& eng, const NearlyHoloForm& F);
NearlyHoloForm compose_e2(const TExpansionEngine& eng, const std::vector<TExpansion>& gs,
                          long long weight, long long N);

// Maass-Shimura operator on a depth-mu piece f/(Pi Id - Pi phi)^mu of a
// weight-k form:
//   delta_k^r = sum_{i=0}^r binom(k - mu + r - 1, i) der^{r-i} f / (...)^{mu+i},
// extended termwise to component vectors. Output weight k+2r, type m+r.
NearlyHoloForm maass_shimura(const HyperDerivTable& tab, const TExpansion& f, int r);
NearlyHoloForm maass_shimura_nhf(const HyperDerivTable& tab, const NearlyHoloForm& F, int r);

}  // namespace dmf

#endif
