#ifndef QFLAG_ERRORS_HPP_
#define QFLAG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qflag {

// Bad user input: unknown Cartan type, malformed word, wrong degree length.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured resource bound (Weyl group enumeration size) was exceeded.
struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant: rank-deficient solve, fractional structure
// constant, failed consistency row. Always a bug, never a user problem.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_input(const std::string& msg) { throw InputError(msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw InternalError(msg); }

}  // namespace qflag

#endif  // QFLAG_ERRORS_HPP_
