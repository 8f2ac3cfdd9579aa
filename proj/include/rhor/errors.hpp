#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace rhor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sizes that do not line up (profile vs. graph, partial colorings).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A coloring that is not proper.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Work that would exceed a configured cap (vertex count, subset count).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Raised by the search when the total-order cap is below the true minimum.
class BudgetExhaustedError : public ResourceError {
 public:
  BudgetExhaustedError(const std::string& what, int largest_tried)
      : ResourceError(what), largest_tried_(largest_tried) {}
  int largest_tried() const { return largest_tried_; }

 private:
  int largest_tried_;
};

/// A coloring with no rainbow transversal. Carries a deficient Hall set:
/// host vertices whose cliques jointly use fewer colors than there are vertices.
class NoRainbowError : public Error {
 public:
  NoRainbowError(const std::string& what, std::vector<int> hall_set, int colors_used)
      : Error(what), hall_set_(std::move(hall_set)), colors_used_(colors_used) {}
  const std::vector<int>& hall_set() const { return hall_set_; }
  int colors_used() const { return colors_used_; }

 private:
  std::vector<int> hall_set_;
  int colors_used_;
};

}  // namespace rhor
