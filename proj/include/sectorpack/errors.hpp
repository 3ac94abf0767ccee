#pragma once

#include <stdexcept>
#include <string>

namespace sectorpack {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_integer_valued_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct zero_discriminant_error : std::domain_error {
    zero_discriminant_error() : std::domain_error("discriminant is zero") {}
};

struct nonzero_discriminant_error : std::domain_error {
    nonzero_discriminant_error() : std::domain_error("discriminant is nonzero") {}
};

struct degenerate_direction_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct unbounded_region_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divergent_integral_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exhausted_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sectorpack
