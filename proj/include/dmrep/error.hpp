#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmrep {

enum class ErrorKind {
  kInvalidInput,
  kAntisymmetryViolation,
  kNoBottom,
  kNoTop,
  kNotDeMorgan,
  kIsNotLattice,
  kEmptyFrame,
  kLimitExceeded,
  kHypothesisFailed,
  kParse,
  kGiveUp,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Resource budgets. Every exponential enumeration is guarded by one of these.
struct Limits {
  /// Maximum element count for down-set enumeration.
  std::size_t down_set_elements = 20;
  /// Maximum |M|^|T| for an explicitly materialized product algebra.
  std::size_t product_elements = 4096;
  /// Maximum number of time-scale points for relation construction.
  std::size_t time_scale_points = 4096;
  /// Maximum |T|^2 * |dom op| work for one induced relation.
  std::uint64_t relation_budget = std::uint64_t{1} << 34;
};

}  // namespace dmrep
