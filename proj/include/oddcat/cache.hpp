/**
 * @file cache.hpp
 * @brief Disk cache for the reduced-word sign tables. Versioned; corrupt or
 *        stale files are ignored and rebuilt.
 */
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oddnilhecke.hpp"

namespace oddcat {

inline constexpr const char* kCacheVersion = "oddcat-cache-2";

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("ODDCAT_CACHE")) return env;
    return std::filesystem::temp_directory_path() / "oddcat-cache";
}

/** Load the sign table for n from the cache directory; false on miss. */
inline bool load_sign_table(int n, const std::filesystem::path& dir) {
    std::filesystem::path file = dir / ("signtable-n" + std::to_string(n) + ".txt");
    std::ifstream f(file);
    if (!f) return false;
    std::string version;
    if (!std::getline(f, version) || version != kCacheVersion) return false;
    std::stringstream rest;
    rest << f.rdbuf();
    return signed_word_table(n).deserialize(rest.str());
}

/** Store the (currently materialized) sign table for n. */
inline bool store_sign_table(int n, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path file = dir / ("signtable-n" + std::to_string(n) + ".txt");
    std::ofstream f(file);
    if (!f) return false;
    f << kCacheVersion << "\n" << signed_word_table(n).serialize();
    return f.good();
}

}  // namespace oddcat
