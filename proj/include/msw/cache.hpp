#ifndef MSW_CACHE_HPP
#define MSW_CACHE_HPP

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

namespace msw {

inline constexpr const char* MSW_VERSION = "0.1.0";

struct CacheConfig {
    bool enabled = true;
    std::filesystem::path dir;
};

// MSW_CACHE_DIR overrides the default per-user cache directory.
inline CacheConfig cache_config_from_env(bool no_cache) {
    CacheConfig cfg;
    cfg.enabled = !no_cache;
    if (const char* dir = std::getenv("MSW_CACHE_DIR")) {
        cfg.dir = dir;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
        cfg.dir = std::filesystem::path(xdg) / "msw";
    } else if (const char* home = std::getenv("HOME")) {
        cfg.dir = std::filesystem::path(home) / ".cache" / "msw";
    } else {
        cfg.dir = std::filesystem::temp_directory_path() / "msw-cache";
    }
    return cfg;
}

namespace cache_detail {

inline std::string sanitize_key(const std::string& key) {
    // filename-safe mangling plus a short FNV hash to keep keys injective
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::string s;
    for (char c : key)
        s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
              c == '_')
                 ? c
                 : '_';
    char buf[20];
    std::snprintf(buf, sizeof(buf), "-%016llx",
                  static_cast<unsigned long long>(h));
    return s + buf;
}

}  // namespace cache_detail

// Returns the cached payload on a version-matched hit; otherwise computes,
// writes atomically (temp file + rename) and returns.  Corrupt entries are
// recomputed with a warning.
inline std::string cache_get_or_compute(
    const CacheConfig& cfg, const std::string& key,
    const std::function<std::string()>& compute,
    std::ostream& warn = std::cerr) {
    if (!cfg.enabled) return compute();

    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    std::filesystem::path file =
        cfg.dir / (cache_detail::sanitize_key(key) + ".json");

    if (std::filesystem::exists(file)) {
        try {
            std::ifstream in(file);
            nlohmann::json entry = nlohmann::json::parse(in);
            if (entry.at("version").get<std::string>() == MSW_VERSION &&
                entry.at("key").get<std::string>() == key)
                return entry.at("payload").get<std::string>();
            // stale version: fall through to recompute
        } catch (const std::exception& e) {
            warn << "msw: corrupt cache entry " << file.string()
                 << ", recomputing\n";
        }
    }

    std::string payload = compute();
    nlohmann::ordered_json entry;
    entry["version"] = MSW_VERSION;
    entry["key"] = key;
    entry["payload"] = payload;
    std::filesystem::path tmp = file;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        out << entry.dump();
    }
    std::filesystem::rename(tmp, file, ec);
    if (ec) {
        warn << "msw: cache write failed: " << ec.message() << "\n";
        std::filesystem::remove(tmp, ec);
    }
    return payload;
}

}  // namespace msw

#endif
