#pragma once

#include <stdexcept>
#include <string>

namespace tbt {

// Bad input: wrong dimensions, non-prime modulus, guard exceeded, malformed file.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A violated internal invariant. Reaching this is a bug, not a usage error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw DomainError(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

} // namespace tbt
