#include "sextic/cache.hpp"

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sextic {

namespace {

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace

ValueCache::ValueCache(std::filesystem::path dir) : dir_(std::move(dir)), enabled_(true) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path ValueCache::path_for(const std::string& key) const {
    return dir_ / (fnv1a_hex(key) + ".val");
}

std::optional<std::string> ValueCache::get(const std::string& fn, const std::string& arg,
                                           int digits) const {
    if (!enabled_) return std::nullopt;
    const std::string key = fn + "|" + arg + "|" + std::to_string(digits);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string stored_key, value;
    if (!std::getline(in, stored_key) || !std::getline(in, value)) return std::nullopt;
    if (stored_key != key) return std::nullopt;  // hash collision, treat as miss
    return value;
}

void ValueCache::put(const std::string& fn, const std::string& arg, int digits,
                     const std::string& value) const {
    if (!enabled_) return;
    const std::string key = fn + "|" + arg + "|" + std::to_string(digits);
    auto final_path = path_for(key);
    auto tmp_path = final_path;
    tmp_path += ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path, std::ios::trunc);
        out << key << "\n" << value << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace sextic
