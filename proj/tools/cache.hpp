#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace slicestab::cli {

// Hex SHA-256 of a string.
std::string sha256_hex(const std::string& data);

// Directory from SLICESTAB_CACHE_DIR, else $XDG_CACHE_HOME/slicestab, else
// ~/.cache/slicestab.
std::filesystem::path default_cache_dir();

// File-per-key store; writes go to a temporary file that is then renamed.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  const std::filesystem::path& dir() const { return dir_; }
  std::optional<std::string> load(const std::string& key) const;
  // Returns false when the entry could not be written.
  bool store(const std::string& key, const std::string& value) const;

 private:
  std::filesystem::path path_for(const std::string& key) const { return dir_ / (key + ".json"); }
  std::filesystem::path dir_;
};

}  // namespace slicestab::cli
