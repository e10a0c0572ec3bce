#pragma once

#include <stdexcept>
#include <string>

namespace pathbetti {

/// Malformed or out-of-range input (bad labels, loops, n < t, non-prime field).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation would exceed the configured face-count cap.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// No closed form exists for the requested (family, t) pair.
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pathbetti
