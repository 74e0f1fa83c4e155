#ifndef DMF_PERIOD_HPP
#define DMF_PERIOD_HPP

#include <map>

#include "dmf/rat.hpp"

namespace dmf {

// K[Pi, Pi^-1]: Laurent polynomials in the formal period symbol Pi.
// Pi is algebraically independent over K, so there are no relations beyond
// the ring axioms; weight bookkeeping elsewhere decides what power of the
// actual period an object carries.
class PeriodRing {
  public:
    PeriodRing() : F_(nullptr) {}
    explicit PeriodRing(const FqField* F) : F_(F) {}
    PeriodRing(const FqField* F, std::map<int, RatK> terms);

    static PeriodRing from_k(const RatK& c, int pi_deg = 0);
    static PeriodRing pi_power(const FqField* F, int d) { return from_k(RatK::one(F), d); }

    const FqField* field() const { return F_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<int, RatK>& terms() const { return t_; }
    RatK coeff(int d) const;

    bool is_homogeneous(int d) const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == d); }
    // the K-part; throws if any Pi power survives
    RatK demote() const;

    PeriodRing operator-() const;
    friend PeriodRing operator+(const PeriodRing& a, const PeriodRing& b);
    friend PeriodRing operator-(const PeriodRing& a, const PeriodRing& b);
    friend PeriodRing operator*(const PeriodRing& a, const PeriodRing& b);
    friend bool operator==(const PeriodRing& a, const PeriodRing& b) { return a.t_ == b.t_; }
    friend bool operator!=(const PeriodRing& a, const PeriodRing& b) { return !(a == b); }

    PeriodRing frob_power(int e) const;  // q^e-th power: coefficients stretch, Pi-degrees * q^e

    std::string to_string() const;  // Pi rendered "PI"

  private:
    const FqField* F_;
    std::map<int, RatK> t_;  // Pi-degree -> nonzero coefficient
    void trim();
};

inline PeriodRing frob_q(const PeriodRing& a) { return a.frob_power(1); }

}  // namespace dmf

#endif
