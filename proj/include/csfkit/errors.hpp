#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace csf {

// Input exceeds a documented size envelope (edge caps, vertex caps,
// colouring budgets).  The CLI maps this to exit code 3.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input.  offset() is the byte position of the first
// offending character.  The CLI maps this to exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace csf
