// dmf: Drinfeld modular forms over F_q[T] -- expansions, cusp data, numeric
// checks. Exit codes: 0 ok, 1 check failure, 2 usage/validation error.
#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "dmf/json_io.hpp"

using namespace dmf;

namespace {

int prime_part(int q, int& s_out) {
    for (int p = 2; p <= q; ++p) {
        if (q % p) continue;
        int s = 0, v = q;
        while (v % p == 0) { v /= p; ++s; }
        if (v == 1) {
            s_out = s;
            return p;
        }
        break;
    }
    return 0;
}

const FqField* field_for(int q) {
    int s = 0;
    int p = prime_part(q, s);
    if (!p) throw CLI::ValidationError("--q must be a prime power");
    return FqField::get(p, s, 1);
}

void print_series(const KSeries& s, const std::string& var) {
    std::cout << s.to_string(var) << "\n";
}

struct Line {
    std::string name;
    bool pass;
    std::string note;
};

int report(const std::vector<Line>& lines) {
    bool all = true;
    for (const auto& l : lines) {
        std::cout << (l.pass ? "pass  " : "FAIL  ") << l.name;
        if (!l.note.empty()) std::cout << "  [" << l.note << "]";
        std::cout << "\n";
        all = all && l.pass;
    }
    std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    return all ? 0 : 1;
}

std::vector<Line> symbolic_suite(int q, long long order, uint64_t seed) {
    std::vector<Line> out;
    const FqField* F = field_for(q);
    TExpansionEngine eng(F);
    std::mt19937_64 rng(seed);

    {
        auto pair = exp_from_module(carlitz(F), 5);
        RatK bracket = RatK(PolyA::theta(F).frob_power(1) - PolyA::theta(F));
        bool ok = pair.exp.coeff(1) == bracket.inverse() && is_identity(pair.exp * pair.log);
        out.push_back({"carlitz exp/log inverse pair, beta_1 = 1/(T^q - T)", ok, ""});
    }
    {
        bool ok = true;
        for (int k = 1; k <= q && ok; ++k) {
            GossPoly g = eng.goss_poly(k);
            ok = g.degree() == k && g.coeff(k) == RatK::one(F);
        }
        out.push_back({"goss polynomials G_k = X^k for k <= q", ok, ""});
    }
    {
        bool ok = true;
        std::string note;
        try {
            TExpansion d = eng.delta(order, DeltaRoute::both);
            note = "lowest order " + std::to_string(d.series.val());
            ok = d.series.val() == q - 1;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        out.push_back({"delta: recursion route = product route", ok, note});
    }
    {
        bool ok = true;
        std::string note;
        try {
            TExpansion e = eng.false_eisenstein(order, ERoute::both);
            ok = e.series.val() == 1;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        out.push_back({"false eisenstein: log-derivative route = monic-sum route", ok, note});
    }
    {
        HyperDerivTable tab = HyperDerivTable::build(eng, 8);
        bool ok = true;
        for (int it = 0; it < 4 && ok; ++it) {
            std::vector<RatK> cs;
            for (int e = 0; e < 12; ++e)
                cs.push_back(RatK(PolyA(F, {uint32_t(rng() % F->card), uint32_t(rng() % F->card)})));
            TExpansion f(KSeries::from_coeffs(RatK::zero(F), 0, cs, 12), 0, std::nullopt);
            TExpansion lhs = hyperderivative(tab, hyperderivative(tab, f, 3), 2);
            TExpansion rhs = hyperderivative(tab, f, 5);
            KSeries scaled = rhs.series.scaled(RatK::from_int(F, binom_mod_p(5, 2, F->p)));
            ok = KSeries::agree_to(lhs.series, scaled, std::min(lhs.prec(), scaled.prec()));
        }
        out.push_back({"hyperderivative composition law", ok, ""});
    }
    {
        HyperDerivTable tab = HyperDerivTable::build(eng, 2);
        TExpansion d = eng.coefficient_forms(order + 4).second;
        NearlyHoloForm lhs = maass_shimura(tab, d, 1);
        NearlyHoloForm rhs = nhf_mul(nhf_from_texp(d), e2_form(eng, order + 2));
        bool ok = nhf_equal(lhs, rhs, order);
        out.push_back({"maass-shimura: delta_{q^2-1}(Delta) = Delta E_2", ok, ""});
    }
    return out;
}

std::vector<Line> tate_suite(int q, long long order) {
    std::vector<Line> out;
    const FqField* F = field_for(q);
    TExpansionEngine eng(F);
    TateModule T = TateModule::build(F, order);
    auto [g1, g2] = eng.coefficient_forms(order);
    out.push_back({"g1 degenerates to 1 at the cusp", T.g1().coeff(0) == RatK::one(F), ""});
    out.push_back({"g2 lowest order = " + std::to_string(T.g2().val()) + " (= q-1)",
                   T.g2().val() == q - 1, ""});
    out.push_back({"g1(X)|_{X->t} equals the g1 expansion",
                   KSeries::agree_to(T.g1(), g1.series, order), ""});
    out.push_back({"g2(X)|_{X->t} equals the delta expansion",
                   KSeries::agree_to(T.g2(), g2.series, order), ""});
    TateModule::XSeries emu = T.cusp_false_eisenstein();
    TExpansion e = eng.false_eisenstein(order, ERoute::logderiv);
    long long M = std::min({emu.prec(), e.prec(), order});
    out.push_back({"E(mu)|_{X->t} equals the false eisenstein expansion",
                   KSeries::agree_to(emu, e.series, M), ""});
    return out;
}

std::vector<Line> numeric_suite(int q, long long uprec) {
    std::vector<Line> out;
    const FqField* F = field_for(q);
    TExpansionEngine eng(F);
    Evaluator ev(eng, std::max<long long>(4 * uprec, 160));
    long long order = std::max<long long>(3 * uprec / 2, 60);
    TExpansion E = eng.false_eisenstein(order, ERoute::logderiv);
    NearlyHoloForm E2 = e2_form(eng, order);
    OmegaPoint P = ev.sample_point(1, PolyA::zero(F));
    GL2K t1{RatK::one(F), RatK::theta(F), RatK::zero(F), RatK::one(F)};
    GL2K inv{RatK::zero(F), RatK::one(F), RatK::one(F), RatK::zero(F)};
    auto fmt = [](double e) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "log_q err %.1f", e);
        return std::string(buf);
    };
    CheckLine l1 = ev.check_inv_distance(inv, P);
    out.push_back({"distance transform at the inversion", l1.pass, fmt(l1.err_logq)});
    CheckLine l2 = ev.check_false_eisenstein_transform(E, t1, P);
    out.push_back({"false Eisenstein quasi-modularity at a translation", l2.pass, fmt(l2.err_logq)});
    CheckLine l3 = ev.check_e2_modularity(E2, t1, P);
    out.push_back({"E_2 modularity at a translation", l3.pass, fmt(l3.err_logq)});
    if (q > 2) {
        CheckReport cm = ev.cm_checks(order, std::min<long long>(uprec / 2, 20));
        for (auto& l : cm.lines) out.push_back({l.name, l.pass, fmt(l.err_logq)});
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Drinfeld modular forms over F_q[T]: t-expansions, Goss polynomials,\n"
                 "Tate cusp data, Maass-Shimura operators and infinity-adic evaluation"};
    app.require_subcommand(1);

    int q = 3;
    long long prec = 0;
    bool as_json = false;
    uint64_t seed = 20260808;
    app.add_option("--q", q, "field size q (prime power)")->capture_default_str();
    app.add_option("--prec", prec, "default precision/order");
    app.add_flag("--json", as_json, "JSON output");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();

    // goss
    auto* goss = app.add_subcommand("goss", "k-th Goss polynomial of the period lattice");
    goss->fallthrough();
    int goss_k = 1;
    goss->add_option("--k", goss_k, "index k >= 1")->required();

    // expand
    auto* expand = app.add_subcommand("expand", "t-expansion of a form");
    expand->fallthrough();
    std::string form = "E", route = "both";
    long long order = 0;
    int eis_k = 0;
    expand->add_option("--form", form, "Ek | g1 | delta | E | J")->required();
    expand->add_option("--order", order, "t-expansion order");
    expand->add_option("--k", eis_k, "weight for --form Ek");
    expand->add_option("--route", route,
                       "delta: recursion|product|both; E: logderiv|monicsum|both");

    // module
    auto* module = app.add_subcommand("module", "Carlitz image of an element of A");
    module->fallthrough();
    std::string module_a = "T";
    module->add_option("--a", module_a, "element of A, e.g. \"T^2+2*T\"");

    // tate
    auto* tate = app.add_subcommand("tate", "Tate-Drinfeld module at the cusp");
    tate->fallthrough();
    long long tate_order = 0;
    tate->add_option("--order", tate_order, "X-adic order");

    // ms
    auto* ms = app.add_subcommand("ms", "Maass-Shimura image of a form");
    ms->fallthrough();
    std::string ms_form = "delta";
    int ms_r = 1;
    long long ms_order = 0;
    ms->add_option("--form", ms_form, "g1 | delta | Ek");
    ms->add_option("--r", ms_r, "operator order r >= 0");
    ms->add_option("--k", eis_k, "weight for --form Ek");
    ms->add_option("--order", ms_order, "t-expansion order");

    // nhf
    auto* nhf = app.add_subcommand("nhf", "nearly holomorphic forms built from E_2");
    nhf->fallthrough();
    int e2_pow = 1;
    long long nhf_order = 0;
    nhf->add_option("--e2-power", e2_pow, "print E_2^j as a component vector");
    nhf->add_option("--order", nhf_order, "t-expansion order");

    // eval
    auto* ev_cmd = app.add_subcommand("eval", "evaluate a form at a point of Omega");
    ev_cmd->fallthrough();
    std::string ev_form = "E", point_str;
    long long ev_order = 0, ev_prec = 0;
    bool unnorm = false;
    ev_cmd->add_option("--form", ev_form, "E | g1 | delta | J | Ek");
    ev_cmd->add_option("--k", eis_k, "weight for --form Ek");
    ev_cmd->add_option("--point", point_str,
                       "point JSON, e.g. {\"m\":2,\"e\":1,\"terms\":[[-1,\"zeta\"]]}")
        ->required();
    ev_cmd->add_option("--order", ev_order, "series order");
    ev_cmd->add_flag("--unnormalized", unnorm, "multiply by Pi^weight");
    ev_cmd->add_option("--uprec", ev_prec, "working u-precision");

    // check
    auto* check = app.add_subcommand("check", "run invariant suites");
    check->fallthrough();
    std::string suite = "all";
    check->add_option("--suite", suite, "all | symbolic | tate | numeric");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        const FqField* F = field_for(q);
        TExpansionEngine eng(F);

        if (*goss) {
            if (goss_k < 1) {
                std::cerr << "validation error: --k must be >= 1\n";
                return 2;
            }
            GossPoly g = eng.goss_poly(goss_k);
            if (as_json) {
                json j;
                j["k"] = g.k;
                json cs = json::array();
                for (auto& c : g.coeffs) cs.push_back(c.to_string());
                j["coeffs"] = cs;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << g.to_string() << "\n";
            }
            return 0;
        }

        if (*expand) {
            long long N = order ? order : (prec ? prec : 20);
            TExpansion f(KSeries::zero(RatK::zero(F)), 0, std::nullopt);
            bool did_both = false;
            if (form == "Ek") {
                if (eis_k < 1) {
                    std::cerr << "validation error: --form Ek needs --k >= 1\n";
                    return 2;
                }
                f = eng.eisenstein(eis_k, N);
                if (f.series.known_zero() && !as_json)
                    std::cout << "note: (q-1) does not divide k, E_k vanishes\n";
            } else if (form == "g1") {
                f = eng.coefficient_forms(N).first;
            } else if (form == "delta") {
                DeltaRoute r = route == "recursion" ? DeltaRoute::recursion
                               : route == "product" ? DeltaRoute::product
                                                    : DeltaRoute::both;
                f = eng.delta(N, r);
                did_both = (r == DeltaRoute::both);
            } else if (form == "E") {
                ERoute r = route == "logderiv"   ? ERoute::logderiv
                           : route == "monicsum" ? ERoute::monicsum
                                                 : ERoute::both;
                f = eng.false_eisenstein(N, r);
                did_both = (r == ERoute::both);
            } else if (form == "J") {
                f = eng.j_function(N);
            } else {
                std::cerr << "validation error: unknown --form " << form << "\n";
                return 2;
            }
            if (as_json) {
                std::cout << to_json(f).dump() << "\n";
            } else {
                print_series(f.series, "t");
                if (did_both) std::cout << "routes agree: true\n";
            }
            return 0;
        }

        if (*module) {
            PolyA a = PolyA::parse(F, module_a);
            if (a.is_zero()) {
                std::cerr << "validation error: --a must be nonzero\n";
                return 2;
            }
            DrinfeldModule<RatK> C = carlitz(F);
            TwistedPoly<RatK> img = C.of(a);
            if (as_json) {
                json j = to_json(C);
                j["a"] = a.to_string();
                j["phi_a"] = to_json(img)["tau_coeffs"];
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "phi_a = ";
                for (int i = 0; i <= img.degree(); ++i) {
                    if (i) std::cout << " + ";
                    std::cout << "(" << img.coeff(i).to_string() << ")";
                    if (i) std::cout << "*tau" << (i > 1 ? "^" + std::to_string(i) : "");
                }
                std::cout << "\n";
            }
            return 0;
        }

        if (*tate) {
            long long N = tate_order ? tate_order : (prec ? prec : 20);
            TateModule T = TateModule::build(F, N);
            if (as_json) {
                json j;
                j["g1"] = to_json(T.g1());
                j["g2"] = to_json(T.g2());
                j["E_mu"] = to_json(T.cusp_false_eisenstein());
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "g1   = " << T.g1().to_string("X") << "\n";
                std::cout << "g2   = " << T.g2().to_string("X") << "\n";
                std::cout << "E_mu = " << T.cusp_false_eisenstein().to_string("X") << "\n";
            }
            return 0;
        }

        if (*ms || *nhf) {
            long long N = (*ms ? ms_order : nhf_order);
            if (!N) N = prec ? prec : 20;
            if (*ms) {
                if (ms_r < 0) {
                    std::cerr << "validation error: --r must be >= 0\n";
                    return 2;
                }
                TExpansion f(KSeries::zero(RatK::zero(F)), 0, std::nullopt);
                if (ms_form == "g1")
                    f = eng.coefficient_forms(N + ms_r).first;
                else if (ms_form == "delta")
                    f = eng.coefficient_forms(N + ms_r).second;
                else if (ms_form == "Ek")
                    f = eng.eisenstein(eis_k, N + ms_r);
                else {
                    std::cerr << "validation error: unknown --form " << ms_form << "\n";
                    return 2;
                }
                HyperDerivTable tab = HyperDerivTable::build(eng, std::max(ms_r, 1));
                NearlyHoloForm out = maass_shimura(tab, f, ms_r);
                if (as_json)
                    std::cout << to_json(out).dump() << "\n";
                else {
                    std::cout << "weight " << out.weight << ", depth " << out.depth() << "\n";
                    for (int i = 0; i <= out.depth(); ++i)
                        std::cout << "f_" << i << " = " << out.comp[size_t(i)].series.to_string("t")
                                  << "\n";
                }
            } else {
                NearlyHoloForm e2 = e2_form(eng, N);
                NearlyHoloForm out = e2;
                for (int i = 1; i < e2_pow; ++i) out = nhf_mul(out, e2);
                if (as_json)
                    std::cout << to_json(out).dump() << "\n";
                else {
                    std::cout << "E_2^" << e2_pow << ": weight " << out.weight << ", depth "
                              << out.depth() << "\n";
                    for (int i = 0; i <= out.depth(); ++i)
                        std::cout << "f_" << i << " = " << out.comp[size_t(i)].series.to_string("t")
                                  << "\n";
                }
            }
            return 0;
        }

        if (*ev_cmd) {
            long long N = ev_order ? ev_order : (prec ? prec : 60);
            long long up = ev_prec ? ev_prec : 200;
            Evaluator evaluator(eng, up);
            TExpansion f(KSeries::zero(RatK::zero(F)), 0, std::nullopt);
            if (ev_form == "E")
                f = eng.false_eisenstein(N, ERoute::logderiv);
            else if (ev_form == "g1")
                f = eng.coefficient_forms(N).first;
            else if (ev_form == "delta")
                f = eng.coefficient_forms(N).second;
            else if (ev_form == "J")
                f = eng.j_function(N);
            else if (ev_form == "Ek")
                f = eng.eisenstein(eis_k, N);
            else {
                std::cerr << "validation error: unknown --form " << ev_form << "\n";
                return 2;
            }
            json pj = json::parse(point_str);
            LocalField::Elem z = point_from_json(evaluator.field(), pj);
            OmegaPoint P = evaluator.point(z);
            EvalResult r = evaluator.eval_texp(f, P, unnorm);
            if (as_json) {
                json j;
                j["value"] = to_json(evaluator.field(), r.value);
                j["tail_valuation"] = r.tail_val;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "value = " << r.value.to_string("u") << "\n";
                std::cout << "tail valuation >= " << r.tail_val << " (u-units)\n";
            }
            return 0;
        }

        if (*check) {
            long long N = prec ? prec : 30;
            std::vector<Line> lines;
            if (suite == "all" || suite == "symbolic") {
                auto s = symbolic_suite(q, N, seed);
                lines.insert(lines.end(), s.begin(), s.end());
            }
            if (suite == "all" || suite == "tate") {
                auto s = tate_suite(q, N);
                lines.insert(lines.end(), s.begin(), s.end());
            }
            if (suite == "all" || suite == "numeric") {
                auto s = numeric_suite(q, prec ? prec : 30);
                lines.insert(lines.end(), s.begin(), s.end());
            }
            if (lines.empty()) {
                std::cerr << "validation error: unknown --suite " << suite << "\n";
                return 2;
            }
            return report(lines);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
