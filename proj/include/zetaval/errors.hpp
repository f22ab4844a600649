#pragma once

#include <stdexcept>
#include <string>

namespace zetaval {

/// Base for every error raised because the caller asked for something outside
/// an operation's domain. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public DomainError {
public:
  explicit DivisionByZero(const std::string& what = "division by zero") : DomainError(what) {}
};

class IncompatibleModuli : public DomainError {
public:
  using DomainError::DomainError;
};

/// Raised when a closed form is requested for L(n, chi) with n and chi of
/// opposite parity. Those values are tied to derivative data at negative
/// integers, which has no polynomial closed form.
class ParityObstruction : public DomainError {
public:
  using DomainError::DomainError;
};

class NotPrimitive : public DomainError {
public:
  using DomainError::DomainError;
};

class NotOdd : public DomainError {
public:
  using DomainError::DomainError;
};

class NotEven : public DomainError {
public:
  using DomainError::DomainError;
};

class UnsupportedCharacter : public DomainError {
public:
  using DomainError::DomainError;
};

class NotLerch : public DomainError {
public:
  using DomainError::DomainError;
};

class PoleAtOne : public DomainError {
public:
  explicit PoleAtOne(const std::string& what = "pole at s = 1") : DomainError(what) {}
};

class RadiusViolation : public DomainError {
public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

/// An internal consistency check failed (two routes to the same exact value
/// disagreed). Never expected; the CLI maps it to exit code 1.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace zetaval
