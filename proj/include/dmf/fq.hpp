#ifndef DMF_FQ_HPP
#define DMF_FQ_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dmf {

struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// F_{q^m} with q = p^s, realized as F_p[x]/(modulus), deg(modulus) = s*m.
// Elements are packed base-p digit vectors (digit i = coefficient of x^i),
// so the packed value of an F_q element (m = 1) is its integer in [0, q).
// Fields are interned: get() returns a stable pointer, safe to share
// between threads.
class FqField {
  public:
    static const FqField* get(int p, int s, int m = 1);

    int p, s, m;
    int n;                     // s*m
    uint64_t card;             // p^n
    uint32_t q;                // p^s
    std::vector<uint8_t> mod;  // monic irreducible over F_p; mod[i] = coeff of x^i, size n (leading 1 implicit)

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t pow(uint32_t a, uint64_t e) const;
    uint32_t frob_q(uint32_t a) const { return pow(a, q); }  // x -> x^q

    uint32_t from_int(long long v) const;  // embeds the prime field
    uint32_t generator() const { return gen_; }

    // Embedding of the degree-s base field F_q (an m = 1 field with the same
    // p, s) into this field; identity when m == 1.
    uint32_t embed_base(uint32_t a) const;
    bool in_base(uint32_t a) const;
    uint32_t project_base(uint32_t a) const;  // partial inverse of embed_base; throws if absent

    std::vector<uint8_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<uint8_t>& d) const;

    std::string to_string(uint32_t a) const;
    uint32_t parse(const std::string& s) const;

  private:
    FqField(int p_, int s_, int m_);
    uint32_t gen_;
    std::vector<uint32_t> base_embed_;  // image of F_q basis powers g_base^k? (see .cpp)
    std::vector<int64_t> base_proj_;    // packed value -> base packed value, -1 if none (small fields only)
};

// Value type used at API boundaries; arithmetic asserts matching fields.
struct FqElem {
    const FqField* F = nullptr;
    uint32_t v = 0;

    FqElem() = default;
    FqElem(const FqField* f, uint32_t val) : F(f), v(val) {}

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    friend FqElem operator+(FqElem a, FqElem b) { return {a.F, a.F->add(a.v, b.v)}; }
    friend FqElem operator-(FqElem a, FqElem b) { return {a.F, a.F->sub(a.v, b.v)}; }
    friend FqElem operator*(FqElem a, FqElem b) { return {a.F, a.F->mul(a.v, b.v)}; }
    friend FqElem operator-(FqElem a) { return {a.F, a.F->neg(a.v)}; }
    friend bool operator==(FqElem a, FqElem b) { return a.F == b.F && a.v == b.v; }
    friend bool operator!=(FqElem a, FqElem b) { return !(a == b); }
    FqElem inverse() const { return {F, F->inv(v)}; }
};

inline FqElem frob_q(const FqElem& a) { return {a.F, a.F->frob_q(a.v)}; }

}  // namespace dmf

#endif
