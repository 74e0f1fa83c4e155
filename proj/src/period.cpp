#include "dmf/period.hpp"

#include <sstream>

namespace dmf {

PeriodRing::PeriodRing(const FqField* F, std::map<int, RatK> terms) : F_(F), t_(std::move(terms)) {
    trim();
}

void PeriodRing::trim() {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->second.is_zero())
            it = t_.erase(it);
        else
            ++it;
    }
}

PeriodRing PeriodRing::from_k(const RatK& c, int pi_deg) {
    PeriodRing r(c.field());
    if (!c.is_zero()) r.t_[pi_deg] = c;
    return r;
}

RatK PeriodRing::coeff(int d) const {
    auto it = t_.find(d);
    return it == t_.end() ? RatK::zero(F_) : it->second;
}

RatK PeriodRing::demote() const {
    if (t_.empty()) return RatK::zero(F_);
    if (!is_homogeneous(0)) throw std::runtime_error("period symbol did not cancel");
    return t_.begin()->second;
}

PeriodRing PeriodRing::operator-() const {
    PeriodRing r(F_);
    for (auto& [d, c] : t_) r.t_[d] = -c;
    return r;
}

PeriodRing operator+(const PeriodRing& a, const PeriodRing& b) {
    PeriodRing r = a;
    if (!r.F_) r.F_ = b.F_;
    for (auto& [d, c] : b.t_) {
        auto it = r.t_.find(d);
        if (it == r.t_.end())
            r.t_[d] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) r.t_.erase(it);
        }
    }
    return r;
}

PeriodRing operator-(const PeriodRing& a, const PeriodRing& b) { return a + (-b); }

PeriodRing operator*(const PeriodRing& a, const PeriodRing& b) {
    PeriodRing r(a.F_ ? a.F_ : b.F_);
    for (auto& [da, ca] : a.t_)
        for (auto& [db, cb] : b.t_) {
            RatK prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.t_.find(da + db);
            if (it == r.t_.end())
                r.t_[da + db] = prod;
            else {
                it->second += prod;
                if (it->second.is_zero()) r.t_.erase(it);
            }
        }
    return r;
}

PeriodRing PeriodRing::frob_power(int e) const {
    PeriodRing r(F_);
    int step = 1;
    for (int i = 0; i < e; ++i) step *= int(F_->q);
    for (auto& [d, c] : t_) r.t_[d * step] = c.frob_power(e);
    return r;
}

std::string PeriodRing::to_string() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (d != 0) os << "*PI^" << d;
    }
    return os.str();
}

}  // namespace dmf
