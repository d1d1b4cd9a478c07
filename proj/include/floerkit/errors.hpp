#pragma once

#include <stdexcept>
#include <string>

namespace floerkit {

// Violated precondition or invalid input (CLI exit code 1).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Numerical method failed to converge (CLI exit code 2).
class convergence_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw precondition_error(what);
}

}  // namespace floerkit
