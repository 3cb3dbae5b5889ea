#pragma once

#include <stdexcept>
#include <string>

namespace paritylab {

// A computation that is outside the supported range of the library
// (ramified base fields, residue characteristic restrictions, ...).
// The CLI maps this to exit code 3.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation that would exceed the desk-scale resource guards
// (point counts over huge fields, group order caps, ...).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace paritylab
