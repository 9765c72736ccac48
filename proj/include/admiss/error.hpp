#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace admiss {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad spec string, violated invariant).
class InputError : public Error {
 public:
  using Error::Error;
};

// A search would examine more candidate tuples than the configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t estimate, std::uint64_t budget)
      : Error("search space estimate " + std::to_string(estimate) +
              " exceeds budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}

  std::uint64_t estimate() const noexcept { return estimate_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimate_;
  std::uint64_t budget_;
};

// An operation was asked to run outside its stated domain.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace admiss
