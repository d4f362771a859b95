#ifndef ARGMAT_ERRORS_HPP
#define ARGMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace argmat {

// Stable error identities. The C API maps these one-to-one onto status codes,
// so additions here must be mirrored in argmat.h.
enum class ErrorCode {
  Parse = 1,
  DuplicateArgument,
  UnknownArgument,
  EmptyFramework,
  EmptySelection,
  DimensionMismatch,
  EnumerationLimitExceeded,
  OracleLimitExceeded,
  PreconditionViolated,
  InternalInvariantViolated,
  InvalidArgument,
  Io,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, int line)
      : Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

class DuplicateArgument : public Error {
public:
  explicit DuplicateArgument(const std::string& label)
      : Error(ErrorCode::DuplicateArgument, "duplicate argument '" + label + "'") {}
  DuplicateArgument(const std::string& label, int line)
      : Error(ErrorCode::DuplicateArgument, "line " + std::to_string(line) +
                                                ": duplicate argument '" + label + "'") {}
};

class UnknownArgument : public Error {
public:
  explicit UnknownArgument(const std::string& label)
      : Error(ErrorCode::UnknownArgument, "unknown argument '" + label + "'") {}
  UnknownArgument(const std::string& label, int line)
      : Error(ErrorCode::UnknownArgument, "line " + std::to_string(line) +
                                              ": unknown argument '" + label + "'") {}
};

class EmptyFramework : public Error {
public:
  explicit EmptyFramework(const std::string& what = "framework has no arguments")
      : Error(ErrorCode::EmptyFramework, what) {}
};

class EmptySelection : public Error {
public:
  explicit EmptySelection(const std::string& what)
      : Error(ErrorCode::EmptySelection, what) {}
};

class DimensionMismatch : public Error {
public:
  explicit DimensionMismatch(const std::string& what)
      : Error(ErrorCode::DimensionMismatch, what) {}
};

class EnumerationLimitExceeded : public Error {
public:
  explicit EnumerationLimitExceeded(const std::string& what)
      : Error(ErrorCode::EnumerationLimitExceeded, what) {}
};

class OracleLimitExceeded : public Error {
public:
  explicit OracleLimitExceeded(const std::string& what)
      : Error(ErrorCode::OracleLimitExceeded, what) {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string& what)
      : Error(ErrorCode::PreconditionViolated, what) {}
};

class InternalInvariantViolated : public Error {
public:
  explicit InternalInvariantViolated(const std::string& what)
      : Error(ErrorCode::InternalInvariantViolated, what) {}
};

}  // namespace argmat

#endif
