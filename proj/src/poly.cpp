#include "dmf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace dmf {

namespace {
constexpr size_t kKaratsubaCutoff = 48;

void mul_school(const FqField* F, const uint32_t* a, size_t na, const uint32_t* b, size_t nb,
                std::vector<uint32_t>& out) {
    out.assign(na + nb - 1, 0);
    if (F->n == 1) {
        // prime-field fast path with delayed reduction
        const uint64_t p = uint64_t(F->p);
        std::vector<uint64_t> acc(na + nb - 1, 0);
        const uint64_t cap = ~uint64_t(0) / (p * p) - 1;
        uint64_t rows = 0;
        for (size_t i = 0; i < na; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < nb; ++j) acc[i + j] += uint64_t(a[i]) * b[j];
            if (++rows >= cap) {
                for (auto& x : acc) x %= p;
                rows = 0;
            }
        }
        for (size_t k = 0; k < acc.size(); ++k) out[k] = uint32_t(acc[k] % p);
    } else {
        for (size_t i = 0; i < na; ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < nb; ++j)
                out[i + j] = F->add(out[i + j], F->mul(a[i], b[j]));
        }
    }
}

void add_into(const FqField* F, std::vector<uint32_t>& dst, size_t off, const std::vector<uint32_t>& src) {
    if (dst.size() < off + src.size()) dst.resize(off + src.size(), 0);
    for (size_t i = 0; i < src.size(); ++i) dst[off + i] = F->add(dst[off + i], src[i]);
}

std::vector<uint32_t> mul_rec(const FqField* F, const uint32_t* a, size_t na, const uint32_t* b, size_t nb) {
    std::vector<uint32_t> out;
    if (na == 0 || nb == 0) return out;
    if (std::min(na, nb) <= kKaratsubaCutoff) {
        mul_school(F, a, na, b, nb, out);
        return out;
    }
    size_t h = (std::max(na, nb) + 1) / 2;
    size_t na0 = std::min(na, h), nb0 = std::min(nb, h);
    const uint32_t *a0 = a, *b0 = b;
    const uint32_t *a1 = a + na0, *b1 = b + nb0;
    size_t na1 = na - na0, nb1 = nb - nb0;

    std::vector<uint32_t> z0 = mul_rec(F, a0, na0, b0, nb0);
    std::vector<uint32_t> z2 = (na1 && nb1) ? mul_rec(F, a1, na1, b1, nb1) : std::vector<uint32_t>{};
    std::vector<uint32_t> sa(std::max(na0, na1), 0), sb(std::max(nb0, nb1), 0);
    for (size_t i = 0; i < na0; ++i) sa[i] = a0[i];
    for (size_t i = 0; i < na1; ++i) sa[i] = F->add(sa[i], a1[i]);
    for (size_t i = 0; i < nb0; ++i) sb[i] = b0[i];
    for (size_t i = 0; i < nb1; ++i) sb[i] = F->add(sb[i], b1[i]);
    std::vector<uint32_t> z1 = mul_rec(F, sa.data(), sa.size(), sb.data(), sb.size());
    // z1 -= z0 + z2
    for (size_t i = 0; i < z0.size(); ++i) z1[i] = F->sub(z1[i], z0[i]);
    for (size_t i = 0; i < z2.size(); ++i) z1[i] = F->sub(z1[i], z2[i]);

    out.assign(na + nb - 1, 0);
    add_into(F, out, 0, z0);
    add_into(F, out, h, z1);
    if (!z2.empty()) add_into(F, out, 2 * h, z2);
    out.resize(na + nb - 1);
    return out;
}
}  // namespace

PolyA::PolyA(const FqField* F, std::vector<uint32_t> coeffs) : F_(F), c_(std::move(coeffs)) {
    trim();
}

PolyA PolyA::monic(const FqField* F, int d, const std::vector<uint32_t>& tail) {
    std::vector<uint32_t> c(size_t(d) + 1, 0);
    for (size_t i = 0; i < tail.size() && int(i) < d; ++i) c[i] = tail[i];
    c[size_t(d)] = 1;
    return PolyA(F, std::move(c));
}

void PolyA::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::operator-() const {
    PolyA r(F_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->neg(c_[i]);
    return r;
}

PolyA operator+(const PolyA& a, const PolyA& b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    PolyA r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F->add(a.coeff(int(i)), b.coeff(int(i)));
    r.trim();
    return r;
}

PolyA operator-(const PolyA& a, const PolyA& b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    PolyA r(F);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F->sub(a.coeff(int(i)), b.coeff(int(i)));
    r.trim();
    return r;
}

PolyA operator*(const PolyA& a, const PolyA& b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    if (a.is_zero() || b.is_zero()) return PolyA(F);
    PolyA r(F);
    r.c_ = mul_rec(F, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size());
    r.trim();
    return r;
}

PolyA PolyA::scaled(uint32_t c) const {
    if (c == 0) return PolyA(F_);
    PolyA r(F_);
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = F_->mul(c_[i], c);
    r.trim();
    return r;
}

PolyA PolyA::shifted(int k) const {
    if (is_zero()) return *this;
    PolyA r(F_);
    r.c_.assign(size_t(k), 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

PolyA PolyA::frob_power(int e) const {
    if (is_zero() || e == 0) return *this;
    uint64_t step = 1;
    for (int i = 0; i < e; ++i) step *= F_->q;
    PolyA r(F_);
    r.c_.assign(size_t(uint64_t(degree()) * step) + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * size_t(step)] = c_[i];
    return r;
}

PolyA PolyA::pow(uint64_t e) const {
    PolyA r = PolyA::one(F_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

void PolyA::divmod(const PolyA& a, const PolyA& b, PolyA& quo, PolyA& rem) {
    if (b.is_zero()) throw division_by_zero("polynomial division by zero");
    const FqField* F = a.F_;
    if (a.degree() < b.degree()) {
        quo = PolyA(F);
        rem = a;
        return;
    }
    std::vector<uint32_t> r = a.c_;
    int db = b.degree();
    uint32_t invlc = F->inv(b.lc());
    std::vector<uint32_t> q(size_t(a.degree() - db) + 1, 0);
    if (F->n == 1) {
        // prime-field fast path: the gcd tower on nested denominators makes
        // this the hottest loop in the library
        const uint64_t p = uint64_t(F->p);
        uint32_t* rp = r.data();
        const uint32_t* bp = b.c_.data();
        for (int i = a.degree(); i >= db; --i) {
            uint64_t c = rp[size_t(i)];
            if (!c) continue;
            uint64_t f = (c * invlc) % p;
            q[size_t(i - db)] = uint32_t(f);
            uint32_t* row = rp + (i - db);
            for (int j = 0; j <= db; ++j) {
                uint64_t v = row[j] + p * p - f * bp[j];
                row[j] = uint32_t(v % p);
            }
        }
    } else {
        for (int i = a.degree(); i >= db; --i) {
            uint32_t c = r[size_t(i)];
            if (!c) continue;
            uint32_t f = F->mul(c, invlc);
            q[size_t(i - db)] = f;
            for (int j = 0; j <= db; ++j)
                r[size_t(i - db + j)] = F->sub(r[size_t(i - db + j)], F->mul(f, b.c_[size_t(j)]));
        }
    }
    quo = PolyA(F, std::move(q));
    rem = PolyA(F, std::move(r));
}

PolyA operator/(const PolyA& a, const PolyA& b) {
    PolyA q, r;
    PolyA::divmod(a, b, q, r);
    return q;
}

PolyA operator%(const PolyA& a, const PolyA& b) {
    PolyA q, r;
    PolyA::divmod(a, b, q, r);
    return r;
}

bool PolyA::try_exact_div(const PolyA& a, const PolyA& b, PolyA& quo) {
    PolyA r;
    divmod(a, b, quo, r);
    return r.is_zero();
}

PolyA PolyA::gcd(PolyA a, PolyA b) {
    const FqField* F = a.F_ ? a.F_ : b.F_;
    while (!b.is_zero()) {
        PolyA r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(F->inv(a.lc()));
}

FqElem PolyA::eval(const FqElem& x) const {
    const FqField* E = x.F;
    FqElem acc(E, 0);
    for (int i = degree(); i >= 0; --i)
        acc = acc * x + FqElem(E, E->embed_base(c_[size_t(i)]));
    return acc;
}

PolyA PolyA::derivative() const {
    PolyA r(F_);
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = F_->mul(c_[i], F_->from_int((long long)i));
    r.trim();
    return r;
}

std::string PolyA::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        uint32_t c = c_[size_t(i)];
        if (!c) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i >= 1) {
            if (c != 1) os << "*";
            os << "T";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

PolyA PolyA::parse(const FqField* F, const std::string& s) {
    // sums of terms c, T, T^k, c*T^k over "+"/"-"
    PolyA r(F);
    size_t i = 0;
    int sign = 1;
    auto flush_term = [&](long long c, int e) {
        std::vector<uint32_t> mono(size_t(e) + 1, 0);
        mono[size_t(e)] = F->from_int(sign * c);
        r = r + PolyA(F, std::move(mono));
    };
    while (i < s.size()) {
        if (s[i] == '+') { sign = 1; ++i; continue; }
        if (s[i] == '-') { sign = -1; ++i; continue; }
        if (isspace(s[i])) { ++i; continue; }
        long long c = 1;
        bool saw_c = false;
        if (isdigit(s[i])) {
            c = 0;
            while (i < s.size() && isdigit(s[i])) c = c * 10 + (s[i++] - '0');
            saw_c = true;
        }
        if (i < s.size() && s[i] == '*') ++i;
        int e = 0;
        if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = 0;
                while (i < s.size() && isdigit(s[i])) e = e * 10 + (s[i++] - '0');
            }
        } else if (!saw_c) {
            throw std::runtime_error("bad polynomial literal: " + s);
        }
        flush_term(c, e);
    }
    return r;
}

}  // namespace dmf
