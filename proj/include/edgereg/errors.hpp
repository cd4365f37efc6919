#ifndef EDGEREG_ERRORS_HPP
#define EDGEREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edgereg {

// Base for all domain errors thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct UnknownVertex : Error {
  explicit UnknownVertex(const std::string& name)
      : Error("unknown vertex: " + name) {}
};

struct VertexNameCollision : Error {
  explicit VertexNameCollision(const std::string& name)
      : Error("vertex name collision: " + name) {}
};

struct NotVeryWellCovered : Error {
  explicit NotVeryWellCovered(const std::string& what) : Error(what) {}
};

struct InvalidLabeling : Error {
  explicit InvalidLabeling(const std::string& what) : Error(what) {}
};

// Thrown whenever a configured resource budget would be exceeded.  The
// message names the budget so callers can report it.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotSquarefree : Error {
  explicit NotSquarefree(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct ZeroIdeal : Error {
  explicit ZeroIdeal(const std::string& what) : Error(what) {}
};

struct UnitIdeal : Error {
  explicit UnitIdeal(const std::string& what) : Error(what) {}
};

}  // namespace edgereg

#endif
