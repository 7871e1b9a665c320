#ifndef CUBICZETA_ERRORS_HPP
#define CUBICZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cz {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ball too wide, or no integer inside it; retry at higher precision.
struct ambiguous_ball : error {
    using error::error;
};

// Sign could not be certified at the precision cap.
struct sign_unresolved : error {
    using error::error;
};

struct precision_exhausted : error {
    using error::error;
};

struct factorization_timeout : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

struct singular_matrix : error {
    using error::error;
};

struct division_by_zero : error {
    using error::error;
};

// QPiD value is not in the (pi^6, D^{-3/2}) shape expected by the reflection.
struct shape_mismatch : error {
    using error::error;
};

// Analytic estimate not within the decision margin of any integer.
struct inconclusive_estimate : error {
    using error::error;
};

}  // namespace cz

#endif
