#ifndef QLOOP_ERRORS_HPP
#define QLOOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qloop {

// Exact division in E left a nonzero remainder. The remainder is kept as a
// pretty-printed string for diagnostics.
class DivisibilityError : public std::runtime_error {
 public:
  DivisibilityError(const std::string& msg, std::string remainder)
      : std::runtime_error(msg), remainder_(std::move(remainder)) {}
  const std::string& remainder() const { return remainder_; }

 private:
  std::string remainder_;
};

// The parity change of basis failed to block-diagonalize the matrix. This
// would falsify the construction, not a user fault; offending entries are
// listed in what().
class BlockStructureError : public std::runtime_error {
 public:
  explicit BlockStructureError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Residual certification of a numeric spectrum failed.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& msg, double worst_residual)
      : std::runtime_error(msg), worst_residual_(worst_residual) {}
  double worst_residual() const { return worst_residual_; }

 private:
  double worst_residual_ = 0.0;
};

// Bisection bracket with the same classification at both ends.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qloop

#endif
