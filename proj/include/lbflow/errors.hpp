#ifndef LBFLOW_ERRORS_HPP
#define LBFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lbflow {

// Malformed or invalid input text (network files, result documents).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Unusable run parameters: eps out of range, delta underflow, DP table caps.
class ParamError : public std::runtime_error {
 public:
  explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// An explicit enumeration/LP budget was exceeded; never silent truncation.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A proven bound was violated at runtime; indicates a bug, not bad input.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lbflow

#endif  // LBFLOW_ERRORS_HPP
