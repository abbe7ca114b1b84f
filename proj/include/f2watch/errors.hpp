#pragma once

#include <stdexcept>
#include <string>

namespace f2watch {

// Bad config file or invalid parameter combination. The CLI maps this to
// exit code 2; everything else maps to 3.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace f2watch
