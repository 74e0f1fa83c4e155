#ifndef DMF_JSON_IO_HPP
#define DMF_JSON_IO_HPP

#include <json.hpp>

#include "dmf/eval.hpp"
#include "dmf/tate.hpp"

namespace dmf {

using nlohmann::json;

// F_q elements as integers in [0, q); PolyA as ascending coefficient lists;
// RatK as "num/den" strings with theta rendered "T";
// LaurentSeries as { "val": v, "prec": N, "coeffs": [...] }
json to_json(const PolyA& a);
json to_json(const RatK& a);
json to_json(const KSeries& s);
json to_json(const TExpansion& f);
json to_json(const NearlyHoloForm& F);
json to_json(const TwistedPoly<RatK>& u);
json to_json(const DrinfeldModule<RatK>& mod);
json to_json(const LocalField& lf, const LocalField::Elem& x);

RatK ratk_from_json(const FqField* F, const json& j);
KSeries kseries_from_json(const FqField* F, const json& j);

// point input syntax: {"m":2,"e":1,"terms":[[0,"zeta"],[-1,"1"]]}, exponents
// in powers of 1/theta at ramification e of the presentation
LocalField::Elem point_from_json(const LocalField& lf, const json& j);

}  // namespace dmf

#endif
