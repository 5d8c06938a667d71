#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace imsolve {

/// Base class of every error the toolkit raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define IMSOLVE_DEFINE_ERROR(Name)    \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

// graph-core
IMSOLVE_DEFINE_ERROR(DuplicateEdge);
IMSOLVE_DEFINE_ERROR(SelfLoop);
IMSOLVE_DEFINE_ERROR(UnknownEndpoint);
IMSOLVE_DEFINE_ERROR(UnknownVertex);
IMSOLVE_DEFINE_ERROR(DuplicateLabel);

// matching / gallai-edmonds
IMSOLVE_DEFINE_ERROR(NotBipartite);
IMSOLVE_DEFINE_ERROR(AuditTooLarge);

// solver
IMSOLVE_DEFINE_ERROR(PreconditionViolated);
IMSOLVE_DEFINE_ERROR(NoRuleApplies);

// oracle
IMSOLVE_DEFINE_ERROR(TooLarge);
IMSOLVE_DEFINE_ERROR(Disconnected);

// instances
IMSOLVE_DEFINE_ERROR(InconsistentHeader);
IMSOLVE_DEFINE_ERROR(InvalidSpec);
IMSOLVE_DEFINE_ERROR(Acyclic);
IMSOLVE_DEFINE_ERROR(NotAClique);

#undef IMSOLVE_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace imsolve
