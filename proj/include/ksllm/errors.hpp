#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ksllm {

enum class ErrorKind {
  input,      // caller violated a precondition
  transport,  // network-level failure after retries
  protocol,   // remote endpoint returned a malformed or inconsistent response
  cache,      // cache entry unreadable
  mock_miss,  // scripted mock client had no matching entry
  usage,      // bad CLI invocation
  io,         // file read/write failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(std::string message) : Error(ErrorKind::input, std::move(message)) {}
};

// Network failure that survived the retry loop; carries how many attempts were made.
class TransportError : public Error {
 public:
  TransportError(std::string message, int attempts)
      : Error(ErrorKind::transport, std::move(message)), attempts_(attempts) {}

  int attempts() const noexcept { return attempts_; }

 private:
  int attempts_;
};

class ProtocolError : public Error {
 public:
  explicit ProtocolError(std::string message) : Error(ErrorKind::protocol, std::move(message)) {}
};

class MockMissError : public Error {
 public:
  explicit MockMissError(std::string message) : Error(ErrorKind::mock_miss, std::move(message)) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(std::string message) : Error(ErrorKind::usage, std::move(message)) {}
};

class IoError : public Error {
 public:
  explicit IoError(std::string message) : Error(ErrorKind::io, std::move(message)) {}
};

}  // namespace ksllm
