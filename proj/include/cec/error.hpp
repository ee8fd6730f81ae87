#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contract violation by the caller: out-of-range index, mismatched signatures,
// malformed table.
class UsageError : public Error {
 public:
  using Error::Error;
};

class PurityViolation : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t cardinality, std::uint64_t budget)
      : Error("hom-set cardinality " + std::to_string(cardinality) + " exceeds budget " +
              std::to_string(budget)),
        cardinality_(cardinality) {}
  std::uint64_t cardinality() const { return cardinality_; }

 private:
  std::uint64_t cardinality_;
};

class UnknownCheckId : public Error {
 public:
  explicit UnknownCheckId(const std::string& id) : Error("unknown check id '" + id + "'") {}
};

// The instance does not satisfy the cartesian effect contract; raised before
// the arrow laws are checked.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cec
