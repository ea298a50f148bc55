#include "dengue/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "dengue/errors.hpp"

namespace dengue {

void RunManifest::add(std::string key, std::string value) { entries.emplace_back(std::move(key), std::move(value)); }

void RunManifest::add(std::string key, double value) { add(std::move(key), format_double(value)); }

std::string RunManifest::header() const
{
    std::string out;
    out += "# toolkit: dengue-fronts " + std::string(kToolkitVersion) + "\n";
    out += "# subcommand: " + subcommand + "\n";
    out += "# parameters: " + provenance + "\n";
    for (const auto& [k, v] : entries) out += "# " + k + ": " + v + "\n";
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out) throw ConfigError("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ConfigError("cannot move output into '" + path + "'");
    }
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

}  // namespace dengue
