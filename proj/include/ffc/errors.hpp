// Copyright 2026 The ffc Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FFC_ERRORS_HPP
#define FFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffc {

/// Invalid argument to a library operation (bad degree, m < 1, odd d, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Caller broke a documented precondition that is not a simple range check,
/// e.g. a matrix without the required constant row sums.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration or leaf budget would be exceeded. Never truncated silently.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation of a rational function at one of its poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed serialized input. `where` names the offending field.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Something that must hold by construction did not. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ffc

#endif  // FFC_ERRORS_HPP
