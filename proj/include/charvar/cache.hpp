#ifndef CHARVAR_CACHE_HPP
#define CHARVAR_CACHE_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <tuple>
#include <string>
#include <vector>

#include <unistd.h>

#include <charvar/document.hpp>
#include <charvar/error.hpp>
#include <charvar/invariants.hpp>

namespace charvar
{

namespace fs = std::filesystem;

struct CacheEntry {
    std::string kind;
    int n = 0;
    int g = 0;
    std::string file;
};

// One JSON document per (kind, n, g) under a directory; writes go through a
// temporary file and a rename.
class DiskCache
{
public:
    explicit DiskCache(fs::path dir) : m_dir(std::move(dir)) {}

    // --cache-dir, then CHARVAR_CACHE_DIR, then ./.charvar-cache
    static fs::path resolve_dir(const std::string &flag)
    {
        if (!flag.empty()) {
            return flag;
        }
        if (const char *env = std::getenv("CHARVAR_CACHE_DIR"); env && *env) {
            return env;
        }
        return ".charvar-cache";
    }

    const fs::path &dir() const noexcept
    {
        return m_dir;
    }

    static std::string file_name(Kind kind, int n, int g)
    {
        return std::string(kind_name(kind)) + "_n" + std::to_string(n) + "_g" + std::to_string(g) + ".json";
    }

    std::optional<json> load(Kind kind, int n, int g) const
    {
        const fs::path p = m_dir / file_name(kind, n, g);
        std::ifstream in(p);
        if (!in) {
            return std::nullopt;
        }
        json doc = json::parse(in, nullptr, false);
        if (doc.is_discarded() || !doc.is_object() || doc.value("version", 0) != document_version) {
            return std::nullopt;
        }
        return doc;
    }

    void store(Kind kind, int n, int g, const json &doc) const
    {
        ensure_dir();
        static std::atomic<unsigned> counter{0};
        const fs::path target = m_dir / file_name(kind, n, g);
        const fs::path tmp = m_dir / (file_name(kind, n, g) + ".tmp." + std::to_string(::getpid()) + "." +
                                      std::to_string(counter++));
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) {
                throw error("cannot write cache file " + tmp.string());
            }
            out << doc.dump() << '\n';
            if (!out) {
                throw error("cannot write cache file " + tmp.string());
            }
        }
        std::error_code ec;
        fs::rename(tmp, target, ec);
        if (ec) {
            fs::remove(tmp, ec);
            throw error("cannot move cache file into place: " + target.string());
        }
    }

    // Sorted by (kind, n, g).
    std::vector<CacheEntry> list() const
    {
        std::vector<CacheEntry> out;
        std::error_code ec;
        if (!fs::is_directory(m_dir, ec)) {
            return out;
        }
        static const std::regex pattern(R"(^(E|hqt|hxy|pp)_n(\d+)_g(\d+)\.json$)");
        for (const auto &entry : fs::directory_iterator(m_dir)) {
            const std::string name = entry.path().filename().string();
            std::smatch m;
            if (entry.is_regular_file() && std::regex_match(name, m, pattern)) {
                out.push_back({m[1].str(), std::stoi(m[2].str()), std::stoi(m[3].str()), name});
            }
        }
        std::sort(out.begin(), out.end(), [](const CacheEntry &a, const CacheEntry &b) {
            return std::tie(a.kind, a.n, a.g) < std::tie(b.kind, b.n, b.g);
        });
        return out;
    }

    // Removes cached documents (and stray temporaries); returns the count.
    std::size_t clear() const
    {
        ensure_dir();
        std::size_t removed = 0;
        std::error_code ec;
        for (const auto &e : list()) {
            if (fs::remove(m_dir / e.file, ec)) {
                ++removed;
            }
        }
        std::vector<fs::path> stray;
        for (const auto &entry : fs::directory_iterator(m_dir)) {
            if (entry.path().filename().string().find(".json.tmp.") != std::string::npos) {
                stray.push_back(entry.path());
            }
        }
        for (const auto &p : stray) {
            fs::remove(p, ec);
        }
        return removed;
    }

    void ensure_dir() const
    {
        std::error_code ec;
        fs::create_directories(m_dir, ec);
        if (ec || !fs::is_directory(m_dir)) {
            throw error("cache directory " + m_dir.string() + " is not creatable");
        }
        if (::access(m_dir.c_str(), W_OK) != 0) {
            throw error("cache directory " + m_dir.string() + " is not writable");
        }
    }

private:
    fs::path m_dir;
};

} // namespace charvar

#endif
