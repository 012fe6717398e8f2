#pragma once

#include <stdexcept>
#include <string>

namespace freeman {

// Raised when an operation's precondition does not hold (empty word where a
// letter is required, open path where a closed one is required, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace freeman
