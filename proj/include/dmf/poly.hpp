#ifndef DMF_POLY_HPP
#define DMF_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dmf/fq.hpp"

namespace dmf {

struct division_by_zero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A = F_q[theta], coefficients ascending in theta-degree.
// The coefficient field must have m = 1.
class PolyA {
  public:
    PolyA() : F_(nullptr) {}
    explicit PolyA(const FqField* F) : F_(F) {}
    PolyA(const FqField* F, std::vector<uint32_t> coeffs);

    static PolyA zero(const FqField* F) { return PolyA(F); }
    static PolyA one(const FqField* F) { return PolyA(F, {1}); }
    static PolyA theta(const FqField* F) { return PolyA(F, {0, 1}); }
    static PolyA constant(const FqField* F, uint32_t c) { return PolyA(F, {c}); }
    // theta^d + lower coefficients taken from `tail` (ascending, size <= d)
    static PolyA monic(const FqField* F, int d, const std::vector<uint32_t>& tail);

    const FqField* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    uint32_t lc() const { return c_.empty() ? 0 : c_.back(); }
    uint32_t coeff(int i) const { return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    PolyA operator-() const;
    friend PolyA operator+(const PolyA& a, const PolyA& b);
    friend PolyA operator-(const PolyA& a, const PolyA& b);
    friend PolyA operator*(const PolyA& a, const PolyA& b);
    friend bool operator==(const PolyA& a, const PolyA& b) { return a.F_ == b.F_ && a.c_ == b.c_; }
    friend bool operator!=(const PolyA& a, const PolyA& b) { return !(a == b); }

    PolyA scaled(uint32_t c) const;
    PolyA shifted(int k) const;  // * theta^k
    // (sum a_i theta^i)^(q^e) = sum a_i theta^(i q^e): exponent stretch over F_q
    PolyA frob_power(int e) const;
    PolyA pow(uint64_t e) const;

    static void divmod(const PolyA& a, const PolyA& b, PolyA& quo, PolyA& rem);
    friend PolyA operator/(const PolyA& a, const PolyA& b);
    friend PolyA operator%(const PolyA& a, const PolyA& b);
    // true and sets quo when b | a exactly
    static bool try_exact_div(const PolyA& a, const PolyA& b, PolyA& quo);
    static PolyA gcd(PolyA a, PolyA b);  // monic

    FqElem eval(const FqElem& x) const;  // x in any extension of F_q
    PolyA derivative() const;

    std::string to_string() const;             // theta rendered "T"
    static PolyA parse(const FqField* F, const std::string& s);

  private:
    const FqField* F_;
    std::vector<uint32_t> c_;
    void trim();
};

}  // namespace dmf

#endif
