#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different fields or rings, or malformed element shapes.
class ShapeMismatch : public Error
{
public:
  using Error::Error;
};

class NotAUnit : public Error
{
public:
  using Error::Error;
};

/// A ring, field or graph is larger than the configured limit.
class SizeCapExceeded : public Error
{
public:
  using Error::Error;
};

class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// Text input that does not match the ring-spec, element or edgelist grammar.
class ParseError : public Error
{
public:
  ParseError(const std::string& what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"),
      position_(position)
  {
  }

  auto position() const -> std::size_t { return position_; }

private:
  std::size_t position_;
};

/// A search ran past its wall-clock budget before reaching a verdict.
class BudgetExceeded : public Error
{
public:
  using Error::Error;
};

/// Something the mathematics guarantees did not happen.
class InternalError : public Error
{
public:
  using Error::Error;
};

} // namespace ucg
