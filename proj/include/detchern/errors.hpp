#pragma once

#include <stdexcept>
#include <string>

namespace detchern {

// Caller passed parameters outside a documented precondition. CLI exit code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal identity that must hold by construction failed (vanishing,
// exact divisibility, cross-method agreement). CLI exit code 3.
struct consistency_error : std::runtime_error {
    explicit consistency_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace detchern
