#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leakaudit {

enum class ErrorKind {
  ingestion,
  parse,
  validation,
  comparability,
  window,
  too_short,
  domain,
  convergence,
  transport,
  protocol,
  credential,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ingestion: return "ingestion";
    case ErrorKind::parse: return "parse";
    case ErrorKind::validation: return "validation";
    case ErrorKind::comparability: return "comparability";
    case ErrorKind::window: return "window";
    case ErrorKind::too_short: return "too_short";
    case ErrorKind::domain: return "domain";
    case ErrorKind::convergence: return "convergence";
    case ErrorKind::transport: return "transport";
    case ErrorKind::protocol: return "protocol";
    case ErrorKind::credential: return "credential";
  }
  return "unknown";
}

// Network-side failures map to exit code 2, everything else is a user error.
constexpr bool is_transport_kind(ErrorKind kind) {
  return kind == ErrorKind::transport || kind == ErrorKind::protocol ||
         kind == ErrorKind::credential;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Transport failure with the retry bookkeeping that led to it.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, int status, int attempts,
                 bool retryable)
      : Error(ErrorKind::transport, message),
        status_(status),
        attempts_(attempts),
        retryable_(retryable) {}

  /// Last HTTP status seen, or 0 when no response arrived.
  int status() const noexcept { return status_; }
  int attempts() const noexcept { return attempts_; }
  bool retryable() const noexcept { return retryable_; }

 private:
  int status_;
  int attempts_;
  bool retryable_;
};

inline std::string with_line(const std::string& what, std::size_t line) {
  return what + " (line " + std::to_string(line) + ")";
}

}  // namespace leakaudit
