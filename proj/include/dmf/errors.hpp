#ifndef DMF_ERRORS_HPP
#define DMF_ERRORS_HPP

#include <stdexcept>

namespace dmf {

struct zero_leading_coefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_invertible_denominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct route_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cross_check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct weight_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistent_convention : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct non_linear_residue : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct outside_convergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct field_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct zero_polynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dmf

#endif
