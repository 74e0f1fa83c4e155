#include "dmf/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace dmf {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense F_p polynomial helpers on digit vectors (ascending)
using Digits = std::vector<uint8_t>;

Digits poly_mul_modp(const Digits& a, const Digits& b, int p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint8_t((r[i + j] + a[i] * b[j]) % p);
    }
    return r;
}

// a mod f, f monic with deg n (leading coeff implicit)
void poly_reduce(Digits& a, const Digits& f, int n, int p) {
    for (int i = int(a.size()) - 1; i >= n; --i) {
        uint8_t c = a[i];
        if (!c) continue;
        a[i] = 0;
        for (int j = 0; j < n; ++j)
            a[i - n + j] = uint8_t((a[i - n + j] + (p - f[j] % p) * c) % p);
    }
    a.resize(n);
}

Digits powmod(Digits base, uint64_t e, const Digits& f, int n, int p) {
    Digits r(n, 0);
    r[0] = 1;
    poly_reduce(base, f, n, p);
    while (e) {
        if (e & 1) {
            r = poly_mul_modp(r, base, p);
            poly_reduce(r, f, n, p);
        }
        base = poly_mul_modp(base, base, p);
        poly_reduce(base, f, n, p);
        e >>= 1;
    }
    return r;
}

bool is_x_power_identity(const Digits& f, int n, int p, uint64_t e) {
    // x^(p^e) == x mod f ?
    Digits x(n, 0);
    if (n == 1) {
        // x reduces to -f[0]
        x[0] = uint8_t((p - f[0] % p) % p);
    } else {
        x[1] = 1;
    }
    uint64_t pe = 1;
    for (uint64_t i = 0; i < e; ++i) pe *= uint64_t(p);
    Digits r = powmod(x, pe, f, n, p);
    return r == x;
}

bool irreducible(const Digits& f, int n, int p) {
    if (!is_x_power_identity(f, n, p, uint64_t(n))) return false;
    for (int d = 2; d <= n; ++d) {
        if (n % d) continue;
        if (!is_prime(d)) continue;
        if (is_x_power_identity(f, n, p, uint64_t(n / d))) return false;
    }
    return true;
}

std::vector<std::pair<uint64_t, int>> factor(uint64_t v) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            int e = 0;
            while (v % d == 0) { v /= d; ++e; }
            f.push_back({d, e});
        }
    }
    if (v > 1) f.push_back({v, 1});
    return f;
}

}  // namespace

FqField::FqField(int p_, int s_, int m_) : p(p_), s(s_), m(m_), n(s_ * m_) {
    if (!is_prime(p)) throw field_error("p must be prime");
    if (s < 1 || m < 1) throw field_error("bad field spec");
    uint64_t c = 1;
    for (int i = 0; i < n; ++i) {
        c *= uint64_t(p);
        if (c > (1u << 16)) throw field_error("field too large (q^m bound 2^16)");
    }
    card = c;
    q = 1;
    for (int i = 0; i < s; ++i) q *= uint32_t(p);

    // find a monic irreducible of degree n over F_p by enumeration
    if (n == 1) {
        mod = {0};  // x itself; reduce() never fires for n=1 inputs already reduced
        // actually use x - 0: arithmetic mod p directly
    } else {
        uint64_t span = 1;
        for (int i = 0; i < n; ++i) span *= uint64_t(p);
        bool found = false;
        for (uint64_t lo = 1; lo < span && !found; ++lo) {
            Digits f(size_t(n), 0);
            uint64_t v = lo;
            for (int i = 0; i < n; ++i) { f[size_t(i)] = uint8_t(v % p); v /= uint64_t(p); }
            if (f[0] == 0) continue;  // x | f
            if (irreducible(f, n, p)) {
                mod = f;
                found = true;
            }
        }
        if (!found) throw field_error("no irreducible found");
    }

    // multiplicative generator: smallest packed value of full order
    gen_ = 0;
    auto fac = factor(card - 1);
    for (uint32_t a = 2; a < card; ++a) {
        bool ok = true;
        for (auto& [pr, e] : fac) {
            (void)e;
            if (pow(a, (card - 1) / pr) == 1) { ok = false; break; }
        }
        if (ok) { gen_ = a; break; }
    }
    if (gen_ == 0 && card == 2) gen_ = 1;

    // embedding of F_q: find a root of the base field's modulus in this field
    if (m == 1) {
        base_embed_.clear();
    } else {
        const FqField* base = FqField::get(p, s, 1);
        // root search: r with base_mod(r) = 0
        uint32_t root = 0;
        bool found = false;
        if (s == 1) {
            root = 1;  // F_p sits at the constant digit
            found = true;
        } else {
            for (uint32_t r = 0; r < card && !found; ++r) {
                // evaluate base->mod (monic deg s) at r
                uint32_t acc = one();  // leading coeff
                for (int i = s - 1; i >= 0; --i)
                    acc = add(mul(acc, r), from_int(base->mod[size_t(i)]));
                if (acc == 0) { root = r; found = true; }
            }
            if (!found) throw field_error("no embedding root found");
        }
        // powers of the root: image of x^k under the embedding
        base_embed_.resize(size_t(s));
        uint32_t pw = one();
        for (int k = 0; k < s; ++k) {
            base_embed_[size_t(k)] = pw;
            pw = (s == 1) ? pw : mul(pw, root);
        }
        base_proj_.assign(size_t(card), -1);
        for (uint64_t a = 0; a < base->card; ++a) {
            base_proj_[embed_base(uint32_t(a))] = int64_t(a);
        }
    }
}

const FqField* FqField::get(int p, int s, int m) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<FqField>> registry;
    auto key = std::make_tuple(p, s, m);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(key);
        if (it != registry.end()) return it->second.get();
    }
    // construct outside the lock: the constructor may intern the base field
    auto fresh = std::unique_ptr<FqField>(new FqField(p, s, m));
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it == registry.end()) it = registry.emplace(key, std::move(fresh)).first;
    return it->second.get();
}

std::vector<uint8_t> FqField::digits(uint32_t a) const {
    std::vector<uint8_t> d(size_t(n), 0);
    for (int i = 0; i < n; ++i) { d[size_t(i)] = uint8_t(a % uint32_t(p)); a /= uint32_t(p); }
    return d;
}

uint32_t FqField::from_digits(const std::vector<uint8_t>& d) const {
    uint32_t a = 0;
    for (int i = n - 1; i >= 0; --i) a = a * uint32_t(p) + (i < int(d.size()) ? d[size_t(i)] % p : 0);
    return a;
}

uint32_t FqField::add(uint32_t a, uint32_t b) const {
    if (n == 1) return (a + b) % uint32_t(p);
    uint32_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
        r += mul * ((a % p + b % p) % uint32_t(p));
        a /= uint32_t(p);
        b /= uint32_t(p);
        mul *= uint32_t(p);
    }
    return r;
}

uint32_t FqField::neg(uint32_t a) const {
    if (n == 1) return (uint32_t(p) - a % p) % uint32_t(p);
    uint32_t r = 0, mul = 1;
    for (int i = 0; i < n; ++i) {
        r += mul * ((uint32_t(p) - a % p) % uint32_t(p));
        a /= uint32_t(p);
        mul *= uint32_t(p);
    }
    return r;
}

uint32_t FqField::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t FqField::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (n == 1) return (a * b) % uint32_t(p);
    Digits da = digits(a), db = digits(b);
    Digits r = poly_mul_modp(da, db, p);
    poly_reduce(r, mod, n, p);
    return from_digits(r);
}

uint32_t FqField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint32_t FqField::inv(uint32_t a) const {
    if (a == 0) throw field_error("division by zero in F_q");
    return pow(a, card - 2);
}

uint32_t FqField::from_int(long long v) const {
    long long r = v % p;
    if (r < 0) r += p;
    return uint32_t(r);
}

uint32_t FqField::embed_base(uint32_t a) const {
    if (m == 1) return a;
    uint32_t r = 0;
    for (int k = 0; k < s; ++k) {
        uint8_t d = uint8_t(a % uint32_t(p));
        a /= uint32_t(p);
        if (d) r = add(r, mul(from_int(d), base_embed_[size_t(k)]));
    }
    return r;
}

bool FqField::in_base(uint32_t a) const {
    if (m == 1) return true;
    return base_proj_[a] >= 0;
}

uint32_t FqField::project_base(uint32_t a) const {
    if (m == 1) return a;
    if (base_proj_[a] < 0) throw field_error("element not in base field");
    return uint32_t(base_proj_[a]);
}

std::string FqField::to_string(uint32_t a) const { return std::to_string(a); }

uint32_t FqField::parse(const std::string& s) const {
    if (s == "zeta") return gen_;
    size_t caret = s.find("zeta^");
    if (caret == 0) {
        uint64_t e = std::stoull(s.substr(5));
        return pow(gen_, e);
    }
    unsigned long v = std::stoul(s);
    if (v >= card) throw field_error("element out of range");
    return uint32_t(v);
}

}  // namespace dmf
