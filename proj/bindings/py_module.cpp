#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmf/json_io.hpp"

namespace py = pybind11;
using namespace dmf;

namespace {

std::vector<std::pair<long long, std::string>> series_terms(const KSeries& s) {
    std::vector<std::pair<long long, std::string>> out;
    s.for_each_term([&](long long e, const RatK& c) { out.push_back({e, c.to_string()}); });
    return out;
}

struct PyEngine {
    const FqField* F;
    TExpansionEngine eng;
    explicit PyEngine(int q) : F(nullptr), eng((check_q(q), FqField::get(pp(q), ss(q), 1))) {
        F = eng.field();
    }
    static void check_q(int q) {
        if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    }
    static int pp(int q) {
        for (int p = 2; p <= q; ++p)
            if (q % p == 0) {
                int v = q;
                while (v % p == 0) v /= p;
                if (v != 1) throw std::invalid_argument("q must be a prime power");
                return p;
            }
        throw std::invalid_argument("q must be a prime power");
    }
    static int ss(int q) {
        int p = pp(q), s = 0;
        while (q > 1) { q /= p; ++s; }
        return s;
    }
};

}  // namespace

PYBIND11_MODULE(pydmf, m) {
    m.doc() = "Drinfeld modular forms over F_q[T]: exact t-expansions, Goss polynomials, "
              "Tate cusp data and infinity-adic evaluation";

    py::register_exception<route_mismatch>(m, "RouteMismatch");
    py::register_exception<outside_convergence>(m, "OutsideConvergence");

    py::class_<PyEngine>(m, "Engine")
        .def(py::init<int>(), py::arg("q"))
        .def_property_readonly("q", [](const PyEngine& e) { return int(e.F->q); })
        .def(
            "goss_poly",
            [](const PyEngine& e, int k) {
                GossPoly g = e.eng.goss_poly(k);
                std::vector<std::string> out;
                for (auto& c : g.coeffs) out.push_back(c.to_string());
                return out;
            },
            py::arg("k"), "coefficients of the k-th Goss polynomial, ascending in X")
        .def(
            "eisenstein",
            [](const PyEngine& e, int k, long long order) {
                return series_terms(e.eng.eisenstein(k, order).series);
            },
            py::arg("k"), py::arg("order"),
            "arithmetic t-expansion of Pi^{-k} E_k as (exponent, coefficient) pairs")
        .def(
            "delta",
            [](const PyEngine& e, long long order, const std::string& route) {
                DeltaRoute r = route == "recursion" ? DeltaRoute::recursion
                               : route == "product" ? DeltaRoute::product
                                                    : DeltaRoute::both;
                return series_terms(e.eng.delta(order, r).series);
            },
            py::arg("order"), py::arg("route") = "both")
        .def(
            "false_eisenstein",
            [](const PyEngine& e, long long order, const std::string& route) {
                ERoute r = route == "logderiv"   ? ERoute::logderiv
                           : route == "monicsum" ? ERoute::monicsum
                                                 : ERoute::both;
                return series_terms(e.eng.false_eisenstein(order, r).series);
            },
            py::arg("order"), py::arg("route") = "both")
        .def(
            "carlitz_exp_coeff",
            [](const PyEngine& e, int i) { return e.eng.carlitz_exp_coeff(i).to_string(); },
            py::arg("i"))
        .def(
            "tate",
            [](const PyEngine& e, long long order) {
                TateModule T = TateModule::build(e.F, order);
                py::dict d;
                d["g1"] = series_terms(T.g1());
                d["g2"] = series_terms(T.g2());
                d["E_mu"] = series_terms(T.cusp_false_eisenstein());
                return d;
            },
            py::arg("order"))
        .def(
            "maass_shimura_delta",
            [](const PyEngine& e, int r, long long order) {
                HyperDerivTable tab = HyperDerivTable::build(e.eng, std::max(1, r));
                TExpansion d = e.eng.coefficient_forms(order + r).second;
                NearlyHoloForm out = maass_shimura(tab, d, r);
                std::vector<std::vector<std::pair<long long, std::string>>> comps;
                for (auto& c : out.comp) comps.push_back(series_terms(c.series));
                return py::make_tuple(out.weight, out.depth(), comps);
            },
            py::arg("r"), py::arg("order"),
            "(weight, depth, components) of delta^r applied to the discriminant")
        .def(
            "cm_report",
            [](const PyEngine& e, long long order, long long uprec, long long target) {
                Evaluator ev(e.eng, uprec);
                CheckReport rep = ev.cm_checks(order, target);
                std::vector<std::pair<std::string, bool>> out;
                for (auto& l : rep.lines) out.push_back({l.name, l.pass});
                return out;
            },
            py::arg("order") = 80, py::arg("uprec") = 280, py::arg("target") = 20);

    m.def("carlitz_period_valuation", [](int q) {
        LocalField lf(PyEngine::pp(q), PyEngine::ss(q), 2, q - 1 > 0 ? q - 1 : 1, 80);
        return lf.carlitz_period().val();
    });
}
