#pragma once

#include <stdexcept>
#include <string>

namespace pbdtk {

// Error categories shared between the C++ core and the C API status codes.
enum class Errc {
    domain = 1,        // argument outside the documented domain
    not_prime_power,   // order has no prime-power decomposition
    cap_exceeded,      // requested object larger than the configured cap
    overflow,          // 64-bit arithmetic would overflow
    parse,             // malformed input document
    io,                // file could not be read or written
    validation,        // object fails its structural contract
    unsupported_k,     // block size outside the implemented range
    congruence,        // necessary divisibility condition fails
    search_exhausted,  // backtracking gave up within its node budget
    hypothesis,        // hypothesis of the underlying inequality fails
    budget,            // solver node budget exhausted
    infeasible,        // no object with the requested parameters exists
    version,           // unsupported document version
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace pbdtk
