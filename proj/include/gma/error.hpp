#pragma once

#include <stdexcept>
#include <string>

namespace gma {

// Malformed specs, documents, or arguments.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search would exceed its configured cap.
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gma
