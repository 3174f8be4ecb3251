#ifndef STABLECOH_ERRORS_HPP
#define STABLECOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stablecoh {

/* Bad input: dimension mismatches, caps exceeded, invalid categories.
 * The CLI maps this to exit code 1. */
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/* A mathematical self-check failed (oracle mismatch, broken resolution,
 * closure violation).  Indicates a bug, never bad input.  Exit code 2. */
class InternalCheckError : public std::runtime_error {
public:
    explicit InternalCheckError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stablecoh

#endif
