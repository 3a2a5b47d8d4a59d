#pragma once

#include <stdexcept>
#include <string>

namespace smlab {

/// Raised when an operation would exceed its configured work budget
/// (reversing step budgets, brute-force class budgets, table sizes).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace smlab
