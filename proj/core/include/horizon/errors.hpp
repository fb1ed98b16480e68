#ifndef HORIZON_ERRORS_HPP
#define HORIZON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace horizon {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed expression source. Carries the byte offset of the failure and a
/// short description of what was expected there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected,
             const std::string& what)
      : Error(what), offset_(offset), expected_(expected) {}
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Evaluation left the domain of an elementary function (division by zero,
/// log of a non-positive number, ...). The message names the offending
/// subexpression and the point.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that had to be inverted or solved turned out singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// An initial data set violated one of its constraints beyond tolerance.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Bad catalog name or parameter range.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Geodesic integration failure: chart exit, non-finite state, or a horizon
/// locus that does not behave like one.
class FoliationError : public Error {
 public:
  using Error::Error;
};

}  // namespace horizon

#endif
