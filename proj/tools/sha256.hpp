// sha256.hpp — Content hashing for the sweep manifest

#pragma once

#include <string>

namespace cavex::cli {

// lowercase hex digest
std::string sha256_hex(const std::string& bytes);

}  // namespace cavex::cli
