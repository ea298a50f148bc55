#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dengue {

inline constexpr const char* kToolkitVersion = "0.1.0";

/// Provenance written at the top of every output file as `# key: value` lines.
struct RunManifest {
    std::string subcommand;
    std::string provenance;
    std::vector<std::pair<std::string, std::string>> entries;  ///< in insertion order

    void add(std::string key, std::string value);
    void add(std::string key, double value);
    std::string header() const;
};

/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace dengue
