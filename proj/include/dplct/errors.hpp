#ifndef DPLCT_ERRORS_HPP
#define DPLCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dplct {

// Malformed input text or JSON (CLI exit code 1).
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos = 0)
        : std::runtime_error(msg), position(pos) {}
};

// Input rejected by a validation predicate (CLI exit code 2).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal iteration budget exhausted (CLI exit code 3).
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct math_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dplct

#endif
