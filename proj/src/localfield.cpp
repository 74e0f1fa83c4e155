#include "dmf/localfield.hpp"

namespace dmf {

LocalField::LocalField(int p, int s, int m, int ram, long long prec)
    : Fm_(FqField::get(p, s, m)), Fq_(FqField::get(p, s, 1)), ram_(ram), prec_(prec) {
    if (ram < 1 || prec < 1) throw domain_error("bad local field parameters");
}

const RatK& LocalField::beta(int j) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (beta_.empty()) beta_.push_back(RatK::one(Fq_));
    while (int(beta_.size()) <= j) {
        int i = int(beta_.size());
        RatK bracket = RatK(PolyA::theta(Fq_).frob_power(i) - PolyA::theta(Fq_));
        beta_.push_back(beta_.back().frob_power(1) * bracket.inverse());
    }
    return beta_[size_t(j)];
}

LocalField::Elem LocalField::embed(const PolyA& a) const {
    Elem acc = zero();
    for (int i = 0; i <= a.degree(); ++i) {
        if (!a.coeff(i)) continue;
        acc = acc + Elem::monomial(FqElem(Fm_, Fm_->embed_base(a.coeff(i))), -ram_ * (long long)i, prec_);
    }
    return acc;
}

LocalField::Elem LocalField::embed(const RatK& a) const {
    if (a.is_zero()) return zero();
    Elem n = embed(a.num());
    if (a.is_integral()) return n;
    return n * embed(a.den()).inverse();
}

LocalField::Elem LocalField::from_unramified(
    const std::vector<std::pair<long long, FqElem>>& terms) const {
    Elem acc = zero();
    for (auto& [e, c] : terms) acc = acc + Elem::monomial(c, e * ram_, prec_);
    return acc;
}

LocalField::Elem LocalField::frobenius(const Elem& x) const {
    std::vector<FqElem> cs;
    long long v = x.val();
    if (x.known_zero()) return x;
    for (long long e = v; e < std::min(x.prec(), v + (long long)x.term_count()); ++e)
        cs.push_back(frob_q(x.coeff(e)));
    return Elem::from_coeffs(FqElem(Fm_, 0), v, cs, x.prec());
}

FqElem LocalField::root_unit(int choice) const {
    // zeta0^{q-1} = -1, lexicographically least packed value, then twisted by
    // successive (q-1)-st roots of unity for alternate choices
    uint32_t target = Fm_->neg(1);
    uint32_t base = 0;
    bool found = false;
    for (uint32_t v = 1; v < Fm_->card; ++v) {
        if (Fm_->pow(v, q() - 1) == target) {
            base = v;
            found = true;
            break;
        }
    }
    if (!found) throw field_too_small("no (q-1)-st root of -theta in the residue field");
    if (choice) {
        // twist by a generator of mu_{q-1} inside F_{q^m}^x
        uint32_t omega = Fm_->pow(Fm_->generator(), (Fm_->card - 1) / (q() - 1));
        for (int i = 0; i < choice; ++i) base = Fm_->mul(base, omega);
    }
    return FqElem(Fm_, base);
}

LocalField::Elem LocalField::root_of_minus_theta(int choice) const {
    if (ram_ % int(q() - 1) != 0)
        throw field_too_small("ramification index not divisible by q-1");
    return from_coeff(root_unit(choice), -(long long)ram_ / (long long)(q() - 1));
}

LocalField::Elem LocalField::carlitz_period(int choice) const {
    Elem acc = theta() * root_of_minus_theta(choice);
    // prod (1 - theta^{1-q^i})^{-1}; theta^{1-q^i} has valuation ram (q^i - 1)
    Elem prod = one();
    long long qi = q();
    for (int i = 1; (long long)ram_ * (qi - 1) < prec_; ++i, qi *= q())
        prod = prod * (one() - u_power(ram_ * (qi - 1)));
    return acc * prod.inverse();
}

LocalField::Elem LocalField::carlitz_exp(const Elem& w) const {
    if (w.known_zero()) return w;
    Elem acc = zero();
    long long vw = w.val();
    // term_j = beta_j w^{q^j}: valuation ram*j*q^j + q^j*v(w); include while
    // it can still sit below the working precision
    Elem wpow = w;
    long long qj = 1;
    for (int j = 0;; ++j) {
        long long term_val = (long long)ram_ * j * qj + qj * vw;
        if (j > 0 && term_val >= prec_ && (long long)ram_ * j + vw > 0) break;
        acc = acc + embed(beta(j)) * wpow;
        qj *= q();
        wpow = wpow.frob();  // w^{q^{j+1}} with exact coefficient powers
        if (qj > (1LL << 40)) throw precision_exhausted("carlitz_exp did not converge");
    }
    return acc;
}

LocalField::Elem LocalField::lattice_exp(const Elem& gen, const Elem& z, int cutoff) const {
    // z prod over monic b (deg <= cutoff) of (1 - (z/(gen b))^{q-1}), using the
    // F_q^x orbit collapse prod_{c in F_q^x} (1 - w/c) = 1 - w^{q-1}
    Elem acc = z;
    std::vector<PolyA> ms;
    for (int e = 0; e <= cutoff; ++e) {
        std::vector<uint32_t> tail(size_t(e), 0);
        while (true) {
            PolyA m = PolyA::monic(Fq_, e, tail);
            Elem lambda = gen * embed(m);
            Elem ratio = z * lambda.inverse();
            acc = acc * (one() - ratio.pow((unsigned long long)(q() - 1)));
            int i = 0;
            for (; i < e; ++i) {
                if (tail[size_t(i)] + 1 < Fq_->card) {
                    ++tail[size_t(i)];
                    break;
                }
                tail[size_t(i)] = 0;
            }
            if (i == e) break;
        }
    }
    return acc;
}

LocalField::Elem LocalField::finite_exp(const Elem& w, int dim) const {
    // e_V for V = {b : deg b < dim}: e_{V'} = e_V - e_V^q / e_V(theta^k)^{q-1}
    // evaluated at w without materializing coefficients
    // maintain ev = e_V(w) and the images u_k = e_V(theta^k)
    Elem ev = w;
    std::vector<Elem> gens;  // e_V(theta^j) for j >= current dim
    for (int j = 0; j < dim; ++j) gens.push_back(embed(PolyA::theta(Fq_).pow(uint64_t(j))));
    for (int step = 0; step < dim; ++step) {
        Elem u = gens[size_t(step)];
        Elem c = u.pow((unsigned long long)(q() - 1)).inverse();
        Elem evq = ev.frob();
        ev = ev - evq * c;
        for (int j = step + 1; j < dim; ++j) {
            Elem gq = gens[size_t(j)].frob();
            gens[size_t(j)] = gens[size_t(j)] - gq * c;
        }
    }
    return ev;
}

long long LocalField::im_val(const Elem& z) const {
    if (z.known_zero()) return z.prec();
    long long best = z.prec();
    bool found = false;
    z.for_each_term([&](long long e, const FqElem& c) {
        if (found) return;
        // K_infty support: exponent divisible by ram, coefficient in F_q
        // (the fixed field of x -> x^q)
        bool in_kinf = (((e % ram_) + ram_) % ram_ == 0) && Fm_->frob_q(c.v) == c.v;
        if (!in_kinf) {
            best = e;
            found = true;
        }
    });
    return best;
}

LocalField::Elem carlitz_period_numeric(int p, int s, long long prec) {
    int q = 1;
    for (int i = 0; i < s; ++i) q *= p;
    LocalField lf(p, s, 2, q - 1, prec);
    return lf.carlitz_period();
}

LocalField::Elem lattice_exp_numeric(const LocalField& lf, const LocalField::Elem& gen,
                                     const LocalField::Elem& z, int cutoff) {
    return lf.lattice_exp(gen, z, cutoff);
}

}  // namespace dmf
