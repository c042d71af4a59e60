#pragma once

#include <stdexcept>
#include <string>

namespace accdom {

// Bad vertex indices, self-loops, empty graphs where forbidden.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed family specs / edge-list files; carries the offending token.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Parameters outside a formula's or bound's validity domain.
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Graph too large for an exhaustive sweep; the message points at the
// closed-form/table route where one exists.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace accdom
