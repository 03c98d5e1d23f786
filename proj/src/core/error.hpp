#pragma once

#include <stdexcept>
#include <string>

namespace vdl {

enum class ErrorCode {
  domain,           // input outside the supported domain or an invalid argument
  range,            // arithmetic result exceeds the supported range
  no_such_divisor,  // n has no divisor strictly below its companion
  resource_limit,   // request exceeds a documented resource bound
  validation,       // malformed claim, registry, or claim file
  internal,         // invariant breach; indicates a bug
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& m) : Error(ErrorCode::domain, m) {}
};

struct RangeError : Error {
  explicit RangeError(const std::string& m) : Error(ErrorCode::range, m) {}
};

struct NoSuchDivisorError : Error {
  explicit NoSuchDivisorError(const std::string& m)
      : Error(ErrorCode::no_such_divisor, m) {}
};

struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& m)
      : Error(ErrorCode::resource_limit, m) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& m)
      : Error(ErrorCode::validation, m) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& m)
      : Error(ErrorCode::internal, m) {}
};

inline const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::range: return "range";
    case ErrorCode::no_such_divisor: return "no-such-divisor";
    case ErrorCode::resource_limit: return "resource-limit";
    case ErrorCode::validation: return "validation";
    case ErrorCode::internal: return "internal";
  }
  return "internal";
}

}  // namespace vdl
