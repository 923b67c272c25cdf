#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtc {

// Base of all library errors. what() always starts with the error name, so
// CLI diagnostics name the failure without extra plumbing.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct KeyRangeError : Error {
  explicit KeyRangeError(const std::string& m) : Error("KeyRangeError", m) {}
};

struct PartitionError : Error {
  explicit PartitionError(const std::string& m) : Error("PartitionError", m) {}
};

struct NotALeafError : Error {
  explicit NotALeafError(const std::string& m) : Error("NotALeaf", m) {}
};

struct DepthLimitError : Error {
  explicit DepthLimitError(const std::string& m) : Error("DepthLimit", m) {}
};

struct OverlapError : Error {
  explicit OverlapError(const std::string& m) : Error("OverlapError", m) {}
};

struct EmptySubsetError : Error {
  explicit EmptySubsetError(const std::string& m) : Error("EmptySubset", m) {}
};

struct UnbalancedInputError : Error {
  explicit UnbalancedInputError(const std::string& m)
      : Error("UnbalancedInput", m) {}
};

struct MissingAssignmentError : Error {
  explicit MissingAssignmentError(const std::string& m)
      : Error("MissingAssignment", m) {}
};

struct InternalInvariantError : Error {
  explicit InternalInvariantError(const std::string& m)
      : Error("InternalInvariantBroken", m) {}
};

struct BudgetExceededError : Error {
  explicit BudgetExceededError(const std::string& m)
      : Error("BudgetExceeded", m) {}
};

class DegeneracyExceededError : public Error {
 public:
  DegeneracyExceededError(std::uint32_t vertex, std::uint32_t degree,
                          const std::string& m)
      : Error("DegeneracyExceeded", m), vertex_(vertex), degree_(degree) {}
  std::uint32_t vertex() const { return vertex_; }
  std::uint32_t degree() const { return degree_; }

 private:
  std::uint32_t vertex_;
  std::uint32_t degree_;
};

struct FormatError : Error {
  explicit FormatError(const std::string& m) : Error("FormatError", m) {}
};

}  // namespace qtc
