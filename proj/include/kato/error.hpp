#pragma once

#include <stdexcept>
#include <string>

namespace kato {

// Bad user input (malformed JSON, schema violations, invalid step lists).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematically impossible request (singular linear part, no anticanonical
// solution, ...). The CLI maps this to exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kato
