#pragma once

#include <stdexcept>
#include <string>

namespace latcomp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Order / lattice construction failures.
struct NotAPartialOrder : Error {
  using Error::Error;
};
struct NotALattice : Error {
  using Error::Error;
};
struct Unbounded : Error {
  using Error::Error;
};

// Complementation failures.
struct NotAComplement : Error {
  explicit NotAComplement(const std::string& element)
      : Error("element '" + element + "' is not mapped to one of its complements"), element(element) {}
  std::string element;
};

// Term / formula errors.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};
struct UnboundVariable : Error {
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'"), name(name) {}
  std::string name;
};
struct UnknownFormula : Error {
  explicit UnknownFormula(const std::string& name) : Error("unknown formula '" + name + "'") {}
};
struct BadParams : Error {
  using Error::Error;
};

// Resource limits.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Congruences.
struct IncompatibleCongruence : Error {
  using Error::Error;
};

// Constructions.
struct UnknownFixture : Error {
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}
};
struct NotNeutral : Error {
  explicit NotNeutral(const std::string& element)
      : Error("element '" + element + "' is not neutral") {}
};
struct InvalidAction : Error {
  InvalidAction(const std::string& x, const std::string& a)
      : Error("S_" + x + " does not send '" + a + "' to a complement") {}
};
struct NotActionShaped : Error {
  NotActionShaped(const std::string& a, const std::string& x)
      : Error("complement of ('" + a + "','" + x +
              "') does not carry the Boolean complement in its second coordinate") {}
};

// Malformed external input (JSON documents, CLI files).
struct InputError : Error {
  using Error::Error;
};

}  // namespace latcomp
