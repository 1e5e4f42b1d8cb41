#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bezout {

// Base for every library error; all error paths named in the module
// contracts map to one subclass each.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct UnsupportedCapability : Error {
  explicit UnsupportedCapability(const std::string& capability,
                                 const std::string& context)
      : Error("missing capability " + capability + " (" + context + ")"),
        capability(capability) {}
  std::string capability;
};

struct NotDivisible : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct InstanceMismatch : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position(position) {}
  std::size_t position;
};

struct NotSimple : Error {
  using Error::Error;
};

struct SearchExhausted : Error {
  using Error::Error;
};

struct InvalidWitness : Error {
  using Error::Error;
};

struct CriterionUnsatisfiable : Error {
  using Error::Error;
};

struct ReductionDiverged : Error {
  using Error::Error;
};

}  // namespace bezout
