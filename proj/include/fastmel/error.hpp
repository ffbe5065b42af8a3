#pragma once

#include <stdexcept>
#include <string>

namespace fastmel {

// Bad input data: malformed files, shape mismatches, out-of-range values.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. CLI exit code 3.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_data(bool cond, const std::string& msg) {
    if (!cond) throw DataError(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

} // namespace fastmel
