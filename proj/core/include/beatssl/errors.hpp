#pragma once

#include <stdexcept>
#include <string>

namespace beatssl {

// Base class for all beatssl failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied configuration (invalid distribution, unknown key,
// combination not in the ablation table, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Matrix/tensor dimensions do not match the contract.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An argument violates a value-level precondition (non-unit axis, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure: missing manifest, unreadable file.
class IoError : public Error {
 public:
  using Error::Error;
};

// Declared-vs-actual mismatch in stored data: wrong sample count,
// duplicate record id, corrupt sidecar.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Input data cannot support the operation: too few beats, flat signal,
// zero-norm feature or embedding rows.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace beatssl
