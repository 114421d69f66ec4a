#pragma once

#include <stdexcept>
#include <string>

namespace fsg {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Camera pose whose rotation is not orthonormal (or otherwise unusable).
class InvalidPoseError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain (e.g. non-positive voxel size).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Graph mutation that would break the hierarchy (single parent,
/// disjoint children, locality).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Hosted-model endpoint unreachable after the configured retries.
class GatewayUnavailableError : public Error {
 public:
  using Error::Error;
};

/// Replay session ran out of recorded responses.
class ReplayUnderrunError : public Error {
 public:
  using Error::Error;
};

/// Replay session next entry does not match the issued request.
class ReplayMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace fsg
