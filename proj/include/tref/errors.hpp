#pragma once

#include <stdexcept>
#include <string>

namespace tref {

// Exit-code class of an error when surfaced through the command line.
enum class ErrorClass { kInvalidInput = 1, kSizeGuard = 2, kInvariant = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, const std::string& what)
      : std::runtime_error(what), cls_(cls) {}
  ErrorClass error_class() const { return cls_; }

 private:
  ErrorClass cls_;
};

// Malformed textual input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorClass::kInvalidInput,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A value violates a structural invariant of its type (loop edge, adhesion
// outside its part, bad tree-decomposition ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorClass::kInvalidInput, what) {}
};

// A precondition of an operation does not hold.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what)
      : Error(ErrorClass::kInvalidInput, what) {}
};

// Search space or input exceeded a configured bound.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what)
      : Error(ErrorClass::kSizeGuard, what) {}
};

// Something the theory guarantees did not happen. Always a bug.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error(ErrorClass::kInvariant, what) {}
};


// Narrower contract failures, kept distinct so callers and tests can tell
// them apart.
#define TREF_CONTRACT_SUBCLASS(Name)                     \
  class Name : public ContractError {                    \
   public:                                               \
    explicit Name(const std::string& what)               \
        : ContractError(#Name ": " + what) {}            \
  };

TREF_CONTRACT_SUBCLASS(MembershipError)  // separation not in the system
TREF_CONTRACT_SUBCLASS(DomainError)      // outside the domain of a shift
TREF_CONTRACT_SUBCLASS(ArgumentError)
TREF_CONTRACT_SUBCLASS(StructureError)   // no unique sink, not a tree, ...
TREF_CONTRACT_SUBCLASS(NestednessError)  // crossing pair where nested required

#undef TREF_CONTRACT_SUBCLASS

}  // namespace tref
