// deviations.hpp — The documented-deviation whitelist for `compare`
//
// Known inconsistencies of the published closed forms live in a versioned
// data file (data/known_deviations.json). Comparison items whose deviation
// exceeds tolerance are classified `documented-deviation` when their id is
// listed there and `mismatch` otherwise; only mismatches fail the command.

#pragma once

#include <set>
#include <string>

namespace cavex::cli {

struct DeviationList {
    std::set<std::string> ids;
    std::string source;  // where the list was loaded from
};

// Resolution order: explicit path, CAVEX_DEVIATIONS environment variable,
// file next to the executable, <exe>/../share/cavex/, ./data/, built-in
// defaults (mirroring the shipped file).
DeviationList load_deviation_list(const std::string& explicit_path);

}  // namespace cavex::cli
