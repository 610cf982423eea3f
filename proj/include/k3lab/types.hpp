#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace k3lab {

// All lattice and form arithmetic uses arbitrary precision: Pell orbits and
// the degree-9 involution coefficients overflow 64-bit intermediates.
using Int = mpz_class;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// violated operation precondition
struct DomainError : Error {
    using Error::Error;
};

// Gram matrices come from user-editable fixture files, so violations are
// typed errors rather than assertions.
struct OddDiagonalError : Error {
    using Error::Error;
};
struct DegenerateError : Error {
    using Error::Error;
};
struct ZeroVectorError : Error {
    using Error::Error;
};

struct NonRootError : Error {
    using Error::Error;
};
struct StepLimitError : Error {
    using Error::Error;
};

struct SizeLimitError : Error {
    using Error::Error;
};
struct NotSquareError : Error {
    using Error::Error;
};
struct NoCertificateError : Error {
    using Error::Error;
};

struct ArityError : Error {
    using Error::Error;
};
struct DegreeError : Error {
    using Error::Error;
};
struct NotBihomogeneousError : Error {
    using Error::Error;
};

struct FieldError : Error {
    using Error::Error;
};

struct InconsistentError : Error {
    using Error::Error;
};
struct NonIntegralError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

inline Int isqrt(const Int& n) {
    if (n < 0) throw NotSquareError("isqrt of negative value");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw SizeLimitError("value exceeds machine word: " + n.get_str());
    return n.get_si();
}

inline std::string to_str(const Int& n) { return n.get_str(); }

}  // namespace k3lab
