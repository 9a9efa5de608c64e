#pragma once

#include <stdexcept>
#include <string>

namespace monli {

/// Error raised by parsers, validators and lookups. Messages carry enough
/// context (offsets, line numbers, node surfaces) to locate the problem.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monli
