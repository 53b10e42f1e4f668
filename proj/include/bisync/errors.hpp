#pragma once

#include <stdexcept>
#include <string>

namespace bisync {

// Malformed or inconsistent input data (bad tokens, bad file contents,
// mismatched corpus sizes). The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bisync
