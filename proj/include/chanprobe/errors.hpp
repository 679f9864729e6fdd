// SPDX-License-Identifier: Apache-2.0
//
// chanprobe: toolkit for probing generative wireless channel models

#pragma once

#include <stdexcept>
#include <string>

namespace chanprobe {

/// Base class for all chanprobe errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// A configuration document or parameter set fails validation.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Fewer samples than the operation's minimum.
class InsufficientData : public Error {
  public:
    using Error::Error;
};

/// Input is structurally valid but mathematically degenerate (e.g. all-zero).
class DegenerateInput : public Error {
  public:
    using Error::Error;
};

/// A numerical procedure produced non-finite values or failed to converge.
class NumericFailure : public Error {
  public:
    using Error::Error;
};

/// Matrix factorization failed even at the maximum diagonal loading.
class NotPositiveSemidefinite : public NumericFailure {
  public:
    using NumericFailure::NumericFailure;
};

/// Two fingerprints were built against different codebooks.
class IncompatibleFingerprints : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

/// Binary file decoding failure, with a machine-checkable kind.
class DecodeError : public IoError {
  public:
    enum class Kind { BadMagic, BadVersion, Truncated, BadHeader };

    DecodeError(Kind kind, const std::string& what) : IoError(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

}  // namespace chanprobe
