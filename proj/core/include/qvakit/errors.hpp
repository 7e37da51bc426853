#pragma once

#include <stdexcept>
#include <string>

namespace qvakit {

// Truncation orders of two operands disagree.
struct order_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Constant term vanishes, no inverse in Q[[h]]/(h^H).
struct non_invertible_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A spectral sample landed on a pole. Callers catch this and resample.
struct pole_at_sample_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The cached f-series is too shallow for the requested h-order.
struct truncation_depth_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No rational interpolant within the stated degree bounds.
struct degree_bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation requested for a family/kind/range that does not support it.
struct unsupported_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Order-by-order solve hit an inconsistent equation (never expected).
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct shape_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qvakit
