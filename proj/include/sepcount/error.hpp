#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepcount {

// Precondition violated by the caller (m > n, bad indices, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Operands that live on different ground sets.
struct size_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal identity failed, e.g. a division that must be exact was not.
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Text that could not be parsed; `position` is the 0-based offset of the
// offending character.
struct parse_error : std::invalid_argument {
    parse_error(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

// The exhaustive oracle was asked for an n above its cap.
struct cap_exceeded : std::runtime_error {
    cap_exceeded(int n, int cap)
        : std::runtime_error("oracle refuses n=" + std::to_string(n) + ": cap is " +
                             std::to_string(cap)),
          requested(n), cap(cap) {}
    int requested;
    int cap;
};

} // namespace sepcount
