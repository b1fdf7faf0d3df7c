// deviations.cpp

#include "deviations.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>

#include "textio.hpp"

namespace cavex::cli {

namespace {

const std::set<std::string>& builtin_ids() {
    static const std::set<std::string> ids = {
        "two-cavity-two-excitation-levels",
        "ring-photon-coefficient-closed-form",
        "ring-two-excitation-reference",
        "coherence-decay-rate",
    };
    return ids;
}

DeviationList parse_file(const std::filesystem::path& path) {
    auto doc = nlohmann::json::parse(read_file(path));
    DeviationList list;
    list.source = path.string();
    for (const auto& entry : doc.at("documented_deviations")) {
        list.ids.insert(entry.at("id").get<std::string>());
    }
    return list;
}

std::filesystem::path executable_dir() {
    std::error_code ec;
    auto exe = std::filesystem::read_symlink("/proc/self/exe", ec);
    if (ec) return {};
    return exe.parent_path();
}

}  // namespace

DeviationList load_deviation_list(const std::string& explicit_path) {
    if (!explicit_path.empty()) {
        return parse_file(explicit_path);  // errors propagate: the user asked for this file
    }
    if (const char* env = std::getenv("CAVEX_DEVIATIONS")) {
        if (*env != '\0') return parse_file(env);
    }
    const auto exe_dir = executable_dir();
    const std::filesystem::path candidates[] = {
        exe_dir / "known_deviations.json",
        exe_dir / ".." / "share" / "cavex" / "known_deviations.json",
        std::filesystem::path("data") / "known_deviations.json",
    };
    for (const auto& candidate : candidates) {
        std::error_code ec;
        if (!candidate.empty() && std::filesystem::exists(candidate, ec)) {
            return parse_file(candidate);
        }
    }
    DeviationList list;
    list.ids = builtin_ids();
    list.source = "built-in";
    return list;
}

}  // namespace cavex::cli
