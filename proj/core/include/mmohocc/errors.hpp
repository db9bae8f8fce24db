#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mmohocc {

// An orbit value left its map's closed domain (or was NaN).
class DomainError : public std::domain_error {
 public:
  DomainError(const std::string& what, std::uint64_t step, double value)
      : std::domain_error(what), step_(step), value_(value) {}

  // Index of the failing iteration within an iterate_n call (0 for iterate).
  std::uint64_t step() const noexcept { return step_; }
  double value() const noexcept { return value_; }

 private:
  std::uint64_t step_;
  double value_;
};

// Key, IV or hex material does not match the selected cipher variant.
class KeyFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed encrypted container.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SequenceTooShort : public std::invalid_argument {
 public:
  SequenceTooShort(const std::string& test, std::size_t have, std::size_t need)
      : std::invalid_argument(test + ": sequence of " + std::to_string(have) +
                              " bits is shorter than the required " +
                              std::to_string(need)),
        test_(test),
        need_(need) {}

  const std::string& test() const noexcept { return test_; }
  std::size_t required() const noexcept { return need_; }

 private:
  std::string test_;
  std::size_t need_;
};

// Invalid benchmark or analysis configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mmohocc
