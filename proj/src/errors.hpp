#ifndef SECBC_ERRORS_HPP
#define SECBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace secbc {

// Error categories, mirrored one-to-one by the C API status codes.
enum class errc {
    invalid_argument,  // malformed input: bad sizes, out-of-range values
    infeasible,        // a budget or rate target that cannot be met
    too_large,         // a request that would exceed hard sizing limits
    internal           // solver invariant violated; indicates a bug
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace secbc

#endif
