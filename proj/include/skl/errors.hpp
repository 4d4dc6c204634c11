#pragma once

#include <stdexcept>
#include <string>

namespace skl {

// Every failure surfaced by the library derives from Error so that the CLI
// can map categories onto exit statuses.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

// Mismatched field contexts, invalid preset parameters, bad field order.
class ConfigError : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

// Malformed coefficient, word, polynomial or file text.
class ParseError : public Error {
   public:
    using Error::Error;
};

// Inputs violating an operation's preconditions (mixed degrees, letters out
// of range, points off the coordinate triangle, ...).
class InputError : public Error {
   public:
    using Error::Error;
};

// Degree cap or group order cap exceeded.
class LimitError : public Error {
   public:
    using Error::Error;
};

// A group element does not preserve an ideal slice or a subspace.
class SymmetryError : public Error {
   public:
    using Error::Error;
};

// An internal invariant failed (non-integer multiplicity, missing central
// element, ...). Indicates a bug or a wrong presentation.
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

// Parameter outside the domain of an operation (non-regular point, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace skl
