#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "character_table.hpp"

namespace symchar {

inline constexpr int kTableFormatVersion = 1;

/// FNV-1a 64-bit, rendered as 16 hex digits.
inline std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

/// Cache directory: explicit flag, then $SYMCHAR_CACHE, then the platform
/// cache location ($XDG_CACHE_HOME/symchar or ~/.cache/symchar).
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag = {})
{
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("SYMCHAR_CACHE"); env && *env) return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "symchar";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "symchar";
    return std::nullopt;
}

/// On-disk character-table cache: one JSON document per table, named
/// chartab_v<version>_n<k>.json, carrying a checksum of its payload.
///
/// Corrupted, stale or unreadable entries are treated as misses; write errors
/// are swallowed. Neither ever aborts a computation.
class DiskTableCache {
public:
    explicit DiskTableCache(std::filesystem::path dir, bool verbose = false, std::ostream* log = &std::cerr)
        : dir_(std::move(dir)), verbose_(verbose), log_(log)
    {
    }

    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::filesystem::path path_for(int n) const
    {
        return dir_ / ("chartab_v" + std::to_string(kTableFormatVersion) + "_n" + std::to_string(n) + ".json");
    }

    static nlohmann::json encode(const CharacterTable& t)
    {
        nlohmann::json payload = t.values();
        return nlohmann::json{{"kind", "character_table"},
                              {"n", t.n()},
                              {"format_version", kTableFormatVersion},
                              {"payload", payload},
                              {"checksum", fnv1a_hex(payload.dump())}};
    }

    /// Validates kind, n, version and checksum.
    static std::optional<CharacterTable> decode(const nlohmann::json& j, int n, std::string* why = nullptr)
    {
        auto fail = [&](const std::string& reason) -> std::optional<CharacterTable> {
            if (why) *why = reason;
            return std::nullopt;
        };
        try {
            if (j.at("kind") != "character_table") return fail("wrong kind");
            if (j.at("format_version").get<int>() != kTableFormatVersion) return fail("format version mismatch");
            if (j.at("n").get<int>() != n) return fail("n mismatch");
            const auto& payload = j.at("payload");
            if (fnv1a_hex(payload.dump()) != j.at("checksum").get<std::string>()) return fail("checksum mismatch");
            return CharacterTable(n, payload.get<std::vector<std::vector<std::int64_t>>>());
        } catch (const std::exception& e) {
            return fail(std::string("malformed entry: ") + e.what());
        }
    }

    std::optional<CharacterTable> load(int n) const
    {
        auto p = path_for(n);
        std::error_code ec;
        if (!std::filesystem::exists(p, ec)) return std::nullopt;
        try {
            std::ifstream in(p);
            nlohmann::json j = nlohmann::json::parse(in);
            std::string why;
            auto t = decode(j, n, &why);
            if (!t) warn("ignoring cache entry " + p.string() + ": " + why);
            return t;
        } catch (const std::exception& e) {
            warn("ignoring unreadable cache entry " + p.string() + ": " + e.what());
            return std::nullopt;
        }
    }

    /// Atomic store: write a temporary file in the cache directory, then rename.
    bool store(const CharacterTable& t) const
    {
        try {
            std::filesystem::create_directories(dir_);
            auto final_path = path_for(t.n());
            std::random_device rd;
            auto tmp = final_path;
            tmp += ".tmp" + std::to_string(rd());
            {
                std::ofstream out(tmp);
                out << encode(t).dump();
                if (!out) throw std::runtime_error("write failed");
            }
            std::filesystem::rename(tmp, final_path);
            return true;
        } catch (const std::exception& e) {
            warn("cannot write cache entry for n=" + std::to_string(t.n()) + ": " + e.what());
            return false;
        }
    }

    /// Route CharacterTableStore through this cache.
    void install() const
    {
        auto self = *this;
        CharacterTableStore::instance().set_backend(
            TableBackend{[self](int n) { return self.load(n); }, [self](const CharacterTable& t) { self.store(t); }});
    }

private:
    void warn(const std::string& msg) const
    {
        if (verbose_ && log_) *log_ << "warning: " << msg << "\n";
    }

    std::filesystem::path dir_;
    bool verbose_ = false;
    std::ostream* log_ = &std::cerr;
};

} // namespace symchar
