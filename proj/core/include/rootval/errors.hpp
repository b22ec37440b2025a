#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace rootval {

// Error taxonomy, chosen so the CLI can map failures to exit codes:
//   Precondition          -> 2 (bad input, parse error, unmet contract)
//   InsufficientPrecision -> 3 (answer could change with more series terms)
//   Internal              -> 4 (an invariant the library asserts was violated)
enum class ErrKind { Precondition, InsufficientPrecision, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail),
        kind_(kind),
        code_(std::move(code)),
        detail_(detail) {}

  Error(ErrKind kind, std::string code, const std::string& detail,
        long location)
      : Error(kind, std::move(code), detail) {
    location_ = location;
  }

  ErrKind kind() const { return kind_; }
  const std::string& code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const std::optional<long>& location() const { return location_; }

 private:
  ErrKind kind_;
  std::string code_;
  std::string detail_;
  std::optional<long> location_;  // byte offset into the offending input
};

[[noreturn]] inline void fail_pre(const std::string& code,
                                  const std::string& detail) {
  throw Error(ErrKind::Precondition, code, detail);
}

[[noreturn]] inline void fail_parse(const std::string& code,
                                    const std::string& detail, long location) {
  throw Error(ErrKind::Precondition, code,
              detail + " (byte " + std::to_string(location) + ")", location);
}

[[noreturn]] inline void fail_precision(const std::string& detail) {
  throw Error(ErrKind::InsufficientPrecision, "InsufficientPrecision", detail);
}

[[noreturn]] inline void fail_internal(const std::string& detail) {
  throw Error(ErrKind::Internal, "InternalInvariantViolation", detail);
}

// Invariants the library promises; a violation is a bug, never a user error.
#define ROOTVAL_CHECK(cond, msg) \
  do {                           \
    if (!(cond)) ::rootval::fail_internal(msg); \
  } while (0)

}  // namespace rootval
