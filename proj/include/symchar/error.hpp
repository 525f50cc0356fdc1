#pragma once

#include <stdexcept>
#include <string>

namespace symchar {

// Base of every exception raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("series has zero constant term and is not invertible") {}
};

// A value that must be a polynomial of bounded degree has a nonzero coefficient
// above the bound, or the truncation order is too small to certify the bound.
struct NotPolynomial : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

struct InnerDegreeZero : Error {
    InnerDegreeZero() : Error("plethysm with a nonzero constant inner argument is not supported") {}
};

// Guard on brute-force sizes in the presentation oracle.
struct TooLarge : Error {
    using Error::Error;
};

// An identity the library asserts at runtime did not hold.
struct IdentityViolation : Error {
    using Error::Error;
};

} // namespace symchar
