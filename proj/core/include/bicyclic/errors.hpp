#pragma once

#include <stdexcept>
#include <string>

namespace bicyclic {

/// An iterative method failed to converge or lost too much precision to be
/// trusted. Precondition violations use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bicyclic
