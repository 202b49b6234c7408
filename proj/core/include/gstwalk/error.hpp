#pragma once

#include <stdexcept>
#include <string>

namespace gstwalk {

/// Error raised for invalid parameters, violated preconditions and
/// diagnosable numerical failures. The message names the constraint.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gstwalk
