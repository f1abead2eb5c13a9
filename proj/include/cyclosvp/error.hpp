#ifndef CYCLOSVP_ERROR_HPP
#define CYCLOSVP_ERROR_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace cyclosvp {

/// Base of all library errors. `code` is a stable snake_case identifier that
/// the CLI emits verbatim; `details` carries small integer context fields.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        std::map<std::string, std::int64_t> details = {})
      : std::runtime_error(message), code_(std::move(code)), details_(std::move(details)) {}

  const std::string& code() const noexcept { return code_; }
  const std::map<std::string, std::int64_t>& details() const noexcept { return details_; }

 private:
  std::string code_;
  std::map<std::string, std::int64_t> details_;
};

/// Input outside an operation's domain (composite p, unsupported class, bad
/// ring index, ...). Maps to CLI exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes disagreed. Never recovered from; exit code 1.
class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& message,
                            std::map<std::string, std::int64_t> details = {})
      : Error("internal_consistency", message, std::move(details)) {}
};

/// Enumeration radius below lambda_1; callers enlarge it and retry.
class RadiusExhausted : public Error {
 public:
  explicit RadiusExhausted(const std::string& message) : Error("radius_exhausted", message) {}
};

}  // namespace cyclosvp

#endif  // CYCLOSVP_ERROR_HPP
