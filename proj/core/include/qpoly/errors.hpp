#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is a byte offset into the input when
/// known; `field` names the JSON field or format element that failed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset = npos, std::string field = {})
      : Error(what), offset_(offset), field_(std::move(field)) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t offset() const noexcept { return offset_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t offset_;
  std::string field_;
};

/// An operation was called outside its precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an axiom; `clause` identifies which one.
class SemanticError : public Error {
 public:
  SemanticError(const std::string& what, std::string clause) : Error(what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// The interval-refinement budget (QPOLY_REFINE_BUDGET) ran out before a
/// sign could be certified.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace qpoly
