// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and runtime budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dmf/eval.hpp"
#include "dmf/tate.hpp"

using namespace dmf;

namespace {

struct Harness {
    int failures = 0;
    void run(int idx, const std::string& name, double budget_s,
             const std::function<bool(std::string&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_budget = secs < budget_s;
        if (!in_budget) detail += " [over budget]";
        bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("%s criterion %2d: %-58s (%6.2fs)%s%s\n", pass ? "PASS" : "FAIL", idx,
                    name.c_str(), secs, detail.empty() ? "" : "  ", detail.c_str());
        std::fflush(stdout);
    }
};

std::mt19937_64 rng(20260808);

// test-local divided-power route for the Goss oracle:
// S_k = (-1)^{k-1} D^{k-1}(t) with D^n(t) = -t sum beta_j D^{n-q^j}(t)
std::vector<KSeries> oracle_derivatives(const TExpansionEngine& eng, int upto) {
    const FqField* F = eng.field();
    std::vector<KSeries> d;
    d.push_back(KSeries::monomial(RatK::one(F), 1));
    for (int n = 1; n <= upto; ++n) {
        KSeries acc = KSeries::zero(RatK::zero(F));
        long long qp = 1;
        for (int j = 0; qp <= n; ++j, qp *= F->q)
            acc = acc + d[size_t(n - qp)].scaled(eng.carlitz_exp_coeff(j));
        d.push_back((-acc).shifted(1));
    }
    return d;
}

}  // namespace

int main() {
    Harness H;

    H.run(1, "exp/log functional equation, q in {2,3,5}, tau-degree 5", 1.0, [](std::string& detail) {
        // Mutual inversion through tau-degree N is equivalent to the pair of
        // two-term intertwining relations with unit constant terms:
        //   beta_k (theta^{q^k} - theta) = beta_{k-1}^q      (exp theta = C_theta exp)
        //   lambda_k (theta^{q^k} - theta) = -lambda_{k-1}   (log C_theta = theta log)
        // since M = exp log then satisfies M_k (theta^{q^k} - theta) =
        // M_{k-1}^q - M_{k-1} with M_0 = 1, forcing M = 1 (same for log exp).
        // Full product checks run where the tower denominators stay small.
        auto product_coeff_vanishes = [](const TwistedSeries<RatK>& u, const TwistedSeries<RatK>& v,
                                         int k, const RatK& target) {
            KFractionSum s(target.field());
            s.sub(target);
            for (int i = 0; i <= k; ++i) {
                if (u.coeff(i).is_zero()) continue;
                RatK t = v.coeff(k - i);
                for (int f = 0; f < i; ++f) t = frob_q(t);
                s.add(u.coeff(i) * t);
            }
            return s.is_zero();
        };
        for (int q : {2, 3, 5}) {
            const FqField* F = FqField::get(q, 1, 1);
            auto C = carlitz(F);
            auto pair = exp_from_module(C, 5);
            RatK bracket = RatK(PolyA::theta(F).frob_power(1) - PolyA::theta(F));
            if (!(pair.exp.coeff(1) == bracket.inverse())) {
                detail = "beta_1 != 1/(theta^q - theta)";
                return false;
            }
            if (!pair.exp.coeff(0).is_one() || !pair.log.coeff(0).is_one()) {
                detail = "constant terms are not 1";
                return false;
            }
            RatK theta = RatK::theta(F);
            for (int k = 1; k <= 5; ++k) {
                RatK bk = RatK(PolyA::theta(F).frob_power(k) - PolyA::theta(F));
                KFractionSum fe(F);
                fe.add(pair.exp.coeff(k) * bk);
                fe.sub(frob_q(pair.exp.coeff(k - 1)));
                if (!fe.is_zero()) {
                    detail = "exp theta != C_theta exp at q=" + std::to_string(q);
                    return false;
                }
                KFractionSum fl(F);
                fl.add(pair.log.coeff(k) * bk);
                fl.add(pair.log.coeff(k - 1));
                if (!fl.is_zero()) {
                    detail = "log C_theta != theta log at q=" + std::to_string(q);
                    return false;
                }
            }
            int product_depth = (q <= 3) ? 5 : 3;
            for (int k = 0; k <= product_depth; ++k) {
                RatK target = k == 0 ? RatK::one(F) : RatK::zero(F);
                if (!product_coeff_vanishes(pair.exp, pair.log, k, target) ||
                    !product_coeff_vanishes(pair.log, pair.exp, k, target)) {
                    detail = "exp/log products are not the identity at q=" + std::to_string(q);
                    return false;
                }
            }
        }
        return true;
    });

    H.run(2, "Goss polynomials vs brute-force oracle, t-order 40", 10.0, [](std::string& detail) {
        for (int q : {2, 3}) {
            const FqField* F = FqField::get(q, 1, 1);
            TExpansionEngine eng(F);
            auto dt = oracle_derivatives(eng, 2 * q + 2);
            for (int k = 1; k <= 2 * q + 2; ++k) {
                GossPoly g = eng.goss_poly(k);
                KSeries lhs = KSeries::zero(RatK::zero(F), 40);
                for (int j = 1; j <= g.degree(); ++j)
                    if (!g.coeff(j).is_zero()) lhs = lhs + KSeries::monomial(g.coeff(j), j, 40);
                KSeries rhs = (k % 2 == 0) ? -dt[size_t(k - 1)] : dt[size_t(k - 1)];
                if (!KSeries::agree_to(lhs, rhs, 40)) {
                    detail = "oracle mismatch at q=" + std::to_string(q) + " k=" + std::to_string(k);
                    return false;
                }
                if (k <= q) {
                    if (g.degree() != k || !(g.coeff(k) == RatK::one(F))) return false;
                    for (int j = 0; j < k; ++j)
                        if (!g.coeff(j).is_zero()) return false;
                }
            }
        }
        return true;
    });

    H.run(3, "Delta: product route = recursion route (q=3 @50, q=5 @30)", 60.0,
          [](std::string& detail) {
              for (auto [q, N] : {std::pair{3, 50LL}, {5, 30LL}}) {
                  const FqField* F = FqField::get(q, 1, 1);
                  TExpansionEngine eng(F);
                  TExpansion rec = eng.coefficient_forms(N).second;
                  TExpansion prod = eng.delta_product(N);
                  if (!KSeries::agree_to(rec.series, prod.series, N)) {
                      detail = "routes differ at q=" + std::to_string(q);
                      return false;
                  }
                  if (rec.series.val() != q - 1) {
                      detail = "lowest order is not q-1";
                      return false;
                  }
                  bool nondiv = false;
                  rec.series.for_each_term([&](long long e, const RatK&) {
                      if (e % q != 0) nondiv = true;
                  });
                  if (!nondiv) {
                      detail = "all t-powers divisible by q";
                      return false;
                  }
              }
              return true;
          });

    H.run(4, "false Eisenstein: log-derivative = monic sum (t-order 50)", 30.0,
          [](std::string& detail) {
              for (int q : {2, 3}) {
                  const FqField* F = FqField::get(q, 1, 1);
                  TExpansionEngine eng(F);
                  TExpansion e = eng.false_eisenstein(50, ERoute::both);  // throws on mismatch
                  if (e.series.val() != 1 || !(e.series.leading() == RatK::one(F))) {
                      detail = "leading term is not t at q=" + std::to_string(q);
                      return false;
                  }
              }
              return true;
          });

    H.run(5, "Tate cross-check: g_i(X)|_{X->t} and E(mu) vs expansions @30", 60.0,
          [](std::string& detail) {
              const FqField* F = FqField::get(3, 1, 1);
              long long N = 30;
              TateModule T = TateModule::build(F, N);
              TExpansionEngine eng(F);
              auto [g1, g2] = eng.coefficient_forms(N);
              if (!KSeries::agree_to(T.g1(), g1.series, N)) {
                  detail = "g1 mismatch";
                  return false;
              }
              if (!KSeries::agree_to(T.g2(), g2.series, N)) {
                  detail = "g2 mismatch";
                  return false;
              }
              TateModule::XSeries emu = T.cusp_false_eisenstein();
              TExpansion e = eng.false_eisenstein(N, ERoute::logderiv);
              long long M = std::min({emu.prec(), e.prec(), N});
              if (!KSeries::agree_to(emu, e.series, M)) {
                  detail = "E(mu) mismatch";
                  return false;
              }
              return true;
          });

    H.run(6, "hyperderivative composition laws (a+b <= 12)", 10.0, [](std::string& detail) {
        const FqField* F = FqField::get(3, 1, 1);
        TExpansionEngine eng(F);
        HyperDerivTable tab = HyperDerivTable::build(eng, 12);
        auto random_texp = [&](long long val, long long prec) {
            std::vector<RatK> cs;
            for (long long e = val; e < prec; ++e) {
                std::vector<uint32_t> c(size_t(rng() % 3) + 1);
                for (auto& x : c) x = uint32_t(rng() % F->card);
                cs.push_back(RatK(PolyA(F, c)));
            }
            return TExpansion(KSeries::from_coeffs(RatK::zero(F), val, cs, prec), 0, std::nullopt);
        };
        for (int it = 0; it < 10; ++it) {
            TExpansion f = random_texp((long long)(rng() % 3) - 1, 20);
            for (auto [a, b] :
                 {std::pair{1, 2}, {2, 3}, {3, 3}, {5, 7}, {1, 11}, {4, 8}, {6, 6}, {2, 10}}) {
                TExpansion lhs = hyperderivative(tab, hyperderivative(tab, f, b), a);
                TExpansion rhs = hyperderivative(tab, f, a + b);
                KSeries scaled = rhs.series.scaled(RatK::from_int(F, binom_mod_p(a + b, a, F->p)));
                if (!KSeries::agree_to(lhs.series, scaled, std::min(lhs.prec(), scaled.prec()))) {
                    detail = "composition law failed";
                    return false;
                }
            }
            // D^n = (D^1)^n / n! for n < p
            TExpansion iter = f;
            long long fact = 1;
            for (int n = 1; n < F->p; ++n) {
                iter = hyperderivative(tab, iter, 1);
                fact = (fact * n) % F->p;
                TExpansion dn = hyperderivative(tab, f, n);
                KSeries lhs = dn.series.scaled(RatK::from_int(F, fact));
                if (!KSeries::agree_to(lhs, iter.series, std::min(lhs.prec(), iter.prec()))) {
                    detail = "factorial identity failed";
                    return false;
                }
            }
        }
        return true;
    });

    H.run(7, "Maass-Shimura: delta_{q^2-1}(Delta) = Delta E_2; Leibniz @40", 30.0,
          [](std::string& detail) {
              const FqField* F = FqField::get(3, 1, 1);
              TExpansionEngine eng(F);
              long long N = 40;
              HyperDerivTable tab = HyperDerivTable::build(eng, 2);
              auto [g1, d] = eng.coefficient_forms(N + 4);
              NearlyHoloForm lhs = maass_shimura(tab, d, 1);
              NearlyHoloForm rhs = nhf_mul(nhf_from_texp(d), e2_form(eng, N + 2));
              if (!nhf_equal(lhs, rhs, N)) {
                  detail = "arbiter identity failed";
                  return false;
              }
              if (lhs.weight != d.weight + 2 || lhs.depth() > 1 || 2 * lhs.depth() > lhs.weight) {
                  detail = "weight/depth bookkeeping failed";
                  return false;
              }
              TExpansion fg = texp_mul(g1, d);
              NearlyHoloForm l2 = maass_shimura(tab, fg, 1);
              NearlyHoloForm r2 = nhf_add(nhf_mul(nhf_from_texp(g1), maass_shimura(tab, d, 1)),
                                          nhf_mul(nhf_from_texp(d), maass_shimura(tab, g1, 1)));
              if (!nhf_equal(l2, r2, N)) {
                  detail = "Leibniz rule failed";
                  return false;
              }
              if (l2.type != type_mod(0 + 1, 3) || l2.weight != g1.weight + d.weight + 2) {
                  detail = "type bookkeeping failed";
                  return false;
              }
              return true;
          });

    H.run(8, "structure theorem round trip on 20 random forms", 30.0, [](std::string& detail) {
        const FqField* F = FqField::get(3, 1, 1);
        TExpansionEngine eng(F);
        long long N = 20, k = 16;
        auto [g1, d] = eng.coefficient_forms(N);
        for (int it = 0; it < 20; ++it) {
            std::vector<TExpansion> gs;
            for (int j = 0; j <= 3; ++j) {
                long long w = k - 2 * j;
                std::vector<std::pair<long long, long long>> sols;
                for (long long b = 0; 8 * b <= w; ++b)
                    if ((w - 8 * b) % 2 == 0) sols.push_back({(w - 8 * b) / 2, b});
                auto [a, b] = sols[rng() % sols.size()];
                KSeries s = KSeries::one(RatK::zero(F), N);
                for (long long i = 0; i < a; ++i) s = s * g1.series;
                for (long long i = 0; i < b; ++i) s = s * d.series;
                gs.push_back(TExpansion(s.truncated(N), w, std::nullopt));
            }
            NearlyHoloForm Fm = compose_e2(eng, gs, k, N);
            auto back = decompose_e2(eng, Fm);
            for (size_t j = 0; j < back.size(); ++j) {
                const KSeries& expect = j < gs.size() ? gs[j].series : KSeries::zero(RatK::zero(F), N);
                if (!KSeries::agree_to(back[j].series, expect,
                                       std::min(back[j].prec(), expect.prec()))) {
                    detail = "recovered g_j differ at it=" + std::to_string(it);
                    return false;
                }
            }
        }
        return true;
    });

    H.run(9, "numeric modularity and distance transforms at q^{-15}", 60.0, [](std::string& detail) {
        const FqField* F = FqField::get(3, 1, 1);
        TExpansionEngine eng(F);
        // 160 working u-digits so every reported value carries >= 40
        // significant u-digits after the magnitude swings inside e_C(pi z)
        Evaluator ev(eng, 160);
        TExpansion E = eng.false_eisenstein(90, ERoute::logderiv);
        NearlyHoloForm E2 = e2_form(eng, 90);
        const FqField* F9 = ev.field().coeff_field();
        FqElem zeta(F9, F9->generator());
        GL2K id{RatK::one(F), RatK::zero(F), RatK::zero(F), RatK::one(F)};
        GL2K t1{RatK::one(F), RatK::theta(F), RatK::zero(F), RatK::one(F)};
        GL2K t2{RatK::one(F), RatK::theta(F) * RatK::theta(F) + RatK::one(F), RatK::zero(F),
                RatK::one(F)};
        GL2K sc{RatK::constant(F, 2), RatK::theta(F), RatK::zero(F), RatK::one(F)};
        GL2K inv{RatK::zero(F), RatK::one(F), RatK::one(F), RatK::zero(F)};
        GL2K alpha{RatK::constant(F, F9->project_base((zeta + frob_q(zeta)).v)),
                   -RatK::constant(F, F9->project_base((zeta * frob_q(zeta)).v)), RatK::one(F),
                   RatK::zero(F)};
        if (!alpha.in_gl2a()) return false;
        std::vector<GL2K> mats = {id, t1, t2, sc, alpha};
        std::vector<OmegaPoint> pts = {
            ev.sample_point(1, PolyA::zero(F)),
            ev.sample_point(2, PolyA::zero(F)),
            ev.sample_point(1, PolyA::one(F)),
            ev.sample_point(2, PolyA::theta(F)),
            ev.point(ev.field().from_coeff(zeta + FqElem(F9, F9->embed_base(1)),
                                            -ev.field().ram())),
        };
        double worst = -1e9;
        for (auto& P : pts) {
            for (auto& g : mats) {
                CheckLine l1 = ev.check_inv_distance(g, P);
                worst = std::max(worst, l1.err_logq);
                if (l1.err_logq > -15.0) {
                    detail = "distance transform error too large";
                    return false;
                }
            }
            CheckLine li = ev.check_inv_distance(inv, P);
            if (li.err_logq > -15.0) return false;
            for (auto& g : {id, t1, t2, sc}) {
                CheckLine l45 = ev.check_false_eisenstein_transform(E, g, P);
                CheckLine le2 = ev.check_e2_modularity(E2, g, P);
                CheckLine lcs = ev.check_component_system(E2, g, P);
                worst = std::max({worst, l45.err_logq, le2.err_logq, lcs.err_logq});
                if (l45.err_logq > -15.0 || le2.err_logq > -15.0 || lcs.err_logq > -15.0) {
                    detail = "triangular transform too large";
                    return false;
                }
            }
        }
        // non-triangular matrix: at the CM fixed point and at a nearby point
        OmegaPoint Pz = ev.point(ev.field().from_coeff(zeta));
        OmegaPoint Pn = ev.point(ev.field().from_coeff(zeta) + ev.field().u_power(ev.field().ram()));
        for (auto& P : {Pz, Pn}) {
            CheckLine l45 = ev.check_false_eisenstein_transform(E, alpha, P);
            CheckLine le2 = ev.check_e2_modularity(E2, alpha, P);
            worst = std::max({worst, l45.err_logq, le2.err_logq});
            if (l45.err_logq > -15.0 || le2.err_logq > -15.0) {
                detail = "non-triangular transform too large";
                return false;
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "worst log_q err %.1f", worst);
        detail = buf;
        return true;
    });

    H.run(10, "CM vanishing of g1~ and J at q in {3,5} to q^{-20}", 30.0, [](std::string& detail) {
        for (auto [q, order, prec] : {std::tuple{3, 80LL, 280LL}, {5, 110LL, 520LL}}) {
            const FqField* F = FqField::get(q, 1, 1);
            TExpansionEngine eng(F);
            Evaluator ev(eng, prec);
            CheckReport rep = ev.cm_checks(order, 20);
            for (auto& l : rep.lines)
                if (!l.pass) {
                    char buf[96];
                    std::snprintf(buf, sizeof buf, "q=%d %s err=%.1f", q, l.name.c_str(), l.err_logq);
                    detail = buf;
                    return false;
                }
        }
        return true;
    });

    H.run(11, "lattice shell sum vs t-expansion for E_{q-1} to q^{-20}", 60.0,
          [](std::string& detail) {
              const FqField* F = FqField::get(3, 1, 1);
              TExpansionEngine eng(F);
              Evaluator ev(eng, 300);
              TExpansion e2 = eng.eisenstein(2, 80);
              double worst = -1e9;
              for (auto [n, shift] : {std::pair{1, "0"}, {2, "0"}, {1, "T+1"}}) {
                  OmegaPoint P = ev.sample_point(n, PolyA::parse(F, shift));
                  LocalField::Elem route1 = ev.eval_texp(e2, P).value;
                  LocalField::Elem route2 = ev.eisenstein_shell_sum(P, 70);
                  double err = ev.rel_err_logq(route1, route2);
                  worst = std::max(worst, err);
                  if (err > -20.0) {
                      detail = "routes differ beyond tolerance";
                      return false;
                  }
              }
              char buf[64];
              std::snprintf(buf, sizeof buf, "worst log_q err %.1f", worst);
              detail = buf;
              return true;
          });

    if (H.failures) {
        std::printf("%d criterion(s) failed\n", H.failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
