#include "dmf/json_io.hpp"

namespace dmf {

json to_json(const PolyA& a) {
    json c = json::array();
    for (int i = 0; i <= a.degree(); ++i) c.push_back(a.coeff(i));
    return c;
}

json to_json(const RatK& a) { return a.to_string(); }

json to_json(const KSeries& s) {
    json coeffs = json::array();
    long long v = s.val();
    if (!s.known_zero()) {
        for (long long e = v; e < std::min(s.prec(), v + (long long)s.term_count()); ++e)
            coeffs.push_back(s.coeff(e).to_string());
    }
    json j;
    j["val"] = s.known_zero() ? 0 : v;
    if (s.exact())
        j["prec"] = nullptr;
    else
        j["prec"] = s.prec();
    j["coeffs"] = coeffs;
    return j;
}

json to_json(const TExpansion& f) {
    json j;
    j["weight"] = f.weight;
    if (f.type)
        j["type"] = *f.type;
    else
        j["type"] = nullptr;
    j["series"] = to_json(f.series);
    return j;
}

json to_json(const NearlyHoloForm& F) {
    json j;
    j["weight"] = F.weight;
    if (F.type)
        j["type"] = *F.type;
    else
        j["type"] = nullptr;
    j["depth"] = F.depth();
    json comps = json::array();
    for (const auto& c : F.comp) comps.push_back(to_json(c));
    j["components"] = comps;
    return j;
}

json to_json(const TwistedPoly<RatK>& u) {
    json c = json::array();
    for (int i = 0; i <= u.degree(); ++i) c.push_back(u.coeff(i).to_string());
    json j;
    j["tau_coeffs"] = c;
    return j;
}

json to_json(const DrinfeldModule<RatK>& mod) {
    json c = json::array();
    for (int i = 0; i <= mod.phi_theta.degree(); ++i)
        c.push_back(mod.phi_theta.coeff(i).to_string());
    json j;
    j["rank"] = mod.rank;
    j["phi_theta"] = c;
    return j;
}

json to_json(const LocalField& lf, const LocalField::Elem& x) {
    json terms = json::array();
    x.for_each_term([&](long long e, const FqElem& c) {
        terms.push_back(json::array({e, c.v}));
    });
    json j;
    j["ram"] = lf.ram();
    j["residue_m"] = lf.coeff_field()->m;
    j["prec"] = x.prec();
    j["terms"] = terms;  // [u-exponent, packed coefficient] pairs
    return j;
}

RatK ratk_from_json(const FqField* F, const json& j) {
    if (j.is_string()) return RatK::parse(F, j.get<std::string>());
    if (j.is_number_integer()) return RatK::from_int(F, j.get<long long>());
    throw domain_error("bad K element encoding");
}

KSeries kseries_from_json(const FqField* F, const json& j) {
    long long val = j.at("val").get<long long>();
    long long prec = j.at("prec").is_null() ? KSeries::exact_prec : j.at("prec").get<long long>();
    std::vector<RatK> cs;
    for (const auto& c : j.at("coeffs")) cs.push_back(ratk_from_json(F, c));
    return KSeries::from_coeffs(RatK::zero(F), val, cs, prec);
}

LocalField::Elem point_from_json(const LocalField& lf, const json& j) {
    int e = j.value("e", 1);
    if (e < 1 || lf.ram() % e != 0)
        throw domain_error("point presentation ramification must divide the field's");
    long long scale = lf.ram() / e;  // u_point = u^scale
    LocalField::Elem acc = lf.zero();
    for (const auto& term : j.at("terms")) {
        long long expo = term.at(0).get<long long>();
        FqElem c(lf.coeff_field(), lf.coeff_field()->parse(term.at(1).get<std::string>()));
        acc = acc + lf.from_coeff(c, expo * scale);
    }
    return acc;
}

}  // namespace dmf
