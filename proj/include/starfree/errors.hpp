#ifndef STARFREE_ERRORS_HPP
#define STARFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starfree {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Cayley table validation failed (no identity, missing inverse, or a
// non-associative triple).
class NotAGroupError : public Error {
public:
  using Error::Error;
};

// A closure or product would exceed the configured order bound.
class ClosureTooLargeError : public Error {
public:
  using Error::Error;
};

// A semidirect action is not a homomorphism into Aut(N).
class NotAHomomorphismError : public Error {
public:
  using Error::Error;
};

// The operation is only defined for non-abelian groups.
class AbelianGroupError : public Error {
public:
  using Error::Error;
};

class UnknownNameError : public Error {
public:
  using Error::Error;
};

class UnsupportedOrderError : public Error {
public:
  using Error::Error;
};

// Class-equation solver input violates size > z or z | size.
class InvalidSizesError : public Error {
public:
  using Error::Error;
};

// Malformed input file or catalog data (schema, checksum, validation).
class DataError : public Error {
public:
  using Error::Error;
};

}  // namespace starfree

#endif  // STARFREE_ERRORS_HPP
