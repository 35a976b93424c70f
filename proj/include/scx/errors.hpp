#pragma once

#include <stdexcept>
#include <string>

namespace scx {

// Raised for invalid user input: malformed facet files, vertices out of
// range, dimension arguments outside a complex, size-guard violations.
// The CLI maps this to exit code 2; everything else is an internal error.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace scx
