#pragma once

#include <stdexcept>
#include <string>

namespace rlemaw {

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidHandle : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by audit_bounds when a counting bound is violated; `check` names
// the failed inequality (e.g. "m5_le_2(m+1)").
struct BoundViolation : std::runtime_error {
    explicit BoundViolation(const std::string& check, const std::string& detail)
        : std::runtime_error("bound violation: " + check + " (" + detail + ")"), check_name(check) {}
    std::string check_name;
};

}  // namespace rlemaw
