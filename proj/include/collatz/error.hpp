#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collatz {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  Overflow,
  CapExceeded,
  InsufficientData,
  Verification,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

/// Raised when a checked 64-bit operation would wrap. `start()` is the
/// trajectory start being processed when known, 0 otherwise.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what, std::uint64_t start = 0)
      : Error(ErrorCode::Overflow, what), start_(start) {}
  std::uint64_t start() const noexcept { return start_; }

 private:
  std::uint64_t start_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t start)
      : Error(ErrorCode::CapExceeded, what), start_(start) {}
  std::uint64_t start() const noexcept { return start_; }

 private:
  std::uint64_t start_;
};

class InsufficientData : public Error {
 public:
  explicit InsufficientData(const std::string& what) : Error(ErrorCode::InsufficientData, what) {}
};

class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error(ErrorCode::Verification, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::Io, what) {}
};

}  // namespace collatz
