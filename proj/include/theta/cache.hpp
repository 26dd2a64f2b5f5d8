#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "theta/braid.hpp"
#include "theta/scalar.hpp"

namespace theta {

inline constexpr const char* kCacheVersion = "thetalink-1";

/// Lowercase hex SHA-256 of the input bytes.
std::string sha256_hex(const std::string& data);

/// Content-addressed store of computed invariants. Each value lives in its
/// own file named by the digest of (canonical braid, invariant, engine,
/// version). Writes go to a temporary file that is then renamed, so readers
/// never see a partial value.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  static std::string key(const BraidWord& w, const std::string& invariant, const std::string& engine);

  std::optional<ScalarValue> get(const std::string& key) const;
  void put(const std::string& key, const ScalarValue& value) const;

  std::filesystem::path path_for(const std::string& key) const;
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

}  // namespace theta
