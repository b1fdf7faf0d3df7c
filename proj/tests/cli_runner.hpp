// cli_runner.hpp — Spawn the cavex binary and capture its output (test helper)

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace test_support {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

inline std::string cavex_binary() {
    const char* bin = std::getenv("CAVEX_BIN");
    if (bin == nullptr || *bin == '\0') {
        throw std::runtime_error("CAVEX_BIN is not set; run through ctest");
    }
    return bin;
}

inline std::filesystem::path fresh_dir(const std::string& tag) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("cavex_" + tag + "_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

inline RunResult run_cli(const std::string& args) {
    const auto dir = fresh_dir("io");
    const auto out_path = dir / "out.txt";
    const auto err_path = dir / "err.txt";
    const std::string command = cavex_binary() + " " + args + " > " + out_path.string() +
                                " 2> " + err_path.string();
    const int status = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::filesystem::remove_all(dir);
    return result;
}

}  // namespace test_support
