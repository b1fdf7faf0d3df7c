// textio.hpp — Deterministic number formatting and atomic file output

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavex::cli {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// 12 significant digits, shortest form ("%.12g"); above every test tolerance,
// below double noise
std::string format_sig12(double v);

std::string join_csv(const std::vector<std::string>& cells);

// write temp file then rename, so readers never observe a partial file
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

}  // namespace cavex::cli
