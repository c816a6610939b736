#pragma once

#include <stdexcept>
#include <string>

namespace gibbs {

/// A rejection loop exhausted its attempt budget.
class AttemptCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gibbs
