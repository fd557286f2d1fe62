#ifndef CYCCUBIC_ERRORS_HPP
#define CYCCUBIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyccubic {

// f_n has a rational root; carries the root in the message.
struct reducible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_denominator_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct singular_basis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A proved identity failed to hold; indicates an implementation bug.
struct internal_inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// An exact certificate check (integrality, discriminant, index, ...) failed.
struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tame-only operation called on a wild field (or vice versa).
struct case_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cyccubic

#endif
