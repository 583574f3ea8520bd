#pragma once

#include <stdexcept>
#include <string>

namespace catchmesh {

// Algorithmic failure: iteration limit hit, rank deficiency, non-convergence.
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// File-level failure: unreadable path, malformed or invalid content.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace catchmesh
