#pragma once

#include <stdexcept>
#include <string>

namespace cgd {

/// p is not a prime, or is outside the supported range.
class InvalidPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument violates a mathematical precondition (parity, ordering, range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A subset of indices is not contained in the support set it must belong to.
class InvalidSubset : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The constructive quadruple recursion only covers odd primes.
class UnsupportedRecursion : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An internal identity that is a theorem failed to hold. Never expected to fire.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cgd
