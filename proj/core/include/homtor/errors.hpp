#pragma once

#include <stdexcept>
#include <string>

namespace homtor {

// Thrown when a computation contradicts an invariant that should hold for
// every valid input (as opposed to a bad argument).  The CLI maps this to a
// distinct exit code.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homtor
