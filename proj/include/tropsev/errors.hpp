#pragma once

#include <stdexcept>
#include <string>

namespace tropsev {

/// Failure classes, mapped one-to-one onto CLI exit codes.
enum class ErrorKind {
  Schema = 1,        ///< malformed input
  Precondition = 2,  ///< well-formed input that violates an operation's contract
  Invariant = 3,     ///< internal consistency breach (always a bug)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what)
      : Error(ErrorKind::Schema, what) {}
};

class InvariantBreach : public Error {
 public:
  explicit InvariantBreach(const std::string& what)
      : Error(ErrorKind::Invariant, what) {}
};

class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& what)
      : Error(ErrorKind::Precondition, code + ": " + what),
        code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define TROPSEV_PRECONDITION(Name)                          \
  class Name : public PreconditionError {                   \
   public:                                                  \
    explicit Name(const std::string& what)                  \
        : PreconditionError(#Name, what) {}                 \
  }

TROPSEV_PRECONDITION(DegenerateSegment);
TROPSEV_PRECONDITION(InvalidPolygon);
TROPSEV_PRECONDITION(InvalidSubdivision);
TROPSEV_PRECONDITION(IncompleteWeight);
TROPSEV_PRECONDITION(NonRegular);
TROPSEV_PRECONDITION(NotNodal);
TROPSEV_PRECONDITION(NotParallelogram);
TROPSEV_PRECONDITION(SupportMismatch);
TROPSEV_PRECONDITION(ZeroScalar);
TROPSEV_PRECONDITION(DeltaTooLarge);
TROPSEV_PRECONDITION(NotIntegral);
TROPSEV_PRECONDITION(NotMaxRank);
TROPSEV_PRECONDITION(NotSimpleNodal);
TROPSEV_PRECONDITION(RegularPointUnasserted);
TROPSEV_PRECONDITION(NotComplementary);
TROPSEV_PRECONDITION(ConfigDegenerate);

#undef TROPSEV_PRECONDITION

}  // namespace tropsev
