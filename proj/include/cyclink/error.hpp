#pragma once

#include <stdexcept>
#include <string>

namespace cyclink {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (bad JSON, dangling indices, writhe not
// normalized, unknown names). The CLI maps this to exit code 2.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclink
