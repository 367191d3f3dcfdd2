#pragma once

#include <stdexcept>
#include <string>

namespace dsm {

// Thrown when an operation is asked to run past its documented size limit.
// Callers (notably the CLI) treat this differently from malformed input.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dsm
