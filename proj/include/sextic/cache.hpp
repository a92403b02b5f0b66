#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace sextic {

/// Persistent decimal-string cache keyed by (function, argument, digits).
/// Entries are one file per key; writes go to a temp file and are renamed
/// into place. Disabled when constructed without a directory.
class ValueCache {
  public:
    ValueCache() = default;
    explicit ValueCache(std::filesystem::path dir);

    bool enabled() const { return enabled_; }
    std::optional<std::string> get(const std::string& fn, const std::string& arg, int digits) const;
    void put(const std::string& fn, const std::string& arg, int digits, const std::string& value) const;

  private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
    bool enabled_ = false;
};

}  // namespace sextic
