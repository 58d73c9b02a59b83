// Exact arithmetic foundation: arbitrary-precision integers and rationals,
// shared error types, and a few small numeric helpers used across the library.
//
// Int is a GMP-backed big integer; Rat is a GMP-backed rational that is kept
// canonical by the backend (always reduced, denominator > 0). All library
// arithmetic is exact — there is no floating point anywhere in the core.

#ifndef POLYCOMB_EXACT_HPP
#define POLYCOMB_EXACT_HPP

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace polycomb {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Raised when an operation's input violates a documented precondition
// (wrong dimensions, malformed data, invalid parameters). The CLI maps
// this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an input is well-formed but exceeds a configured resource cap
// (matrix size, vertex count, cell count, ...). The CLI maps this to exit
// code 3.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Int& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Number of bits in the binary representation of |x|; bit_length(0) == 0.
inline std::size_t bit_length(const Int& x) {
    if (x == 0) return 0;
    return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

inline Int pow2(std::size_t e) { return boost::multiprecision::pow(Int(2), static_cast<unsigned>(e)); }

inline Int int_pow(const Int& base, std::size_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

inline Int factorial(std::size_t n) {
    Int r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned long>(i);
    return r;
}

// Parses a decimal integer string ("-?[0-9]+"); rejects anything else so that
// wire-format numbers are never silently misread.
Int parse_decimal(const std::string& text);

}  // namespace polycomb

#endif
