// errors.hpp — Error types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace cavex {

// Divergence, residual failure, positivity violation and similar runtime
// numerical failures. Invalid arguments use std::invalid_argument directly.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cavex
