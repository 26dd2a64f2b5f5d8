#include "theta/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace theta {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string ResultCache::key(const BraidWord& w, const std::string& invariant, const std::string& engine) {
  // The strand count is part of the canonical text: trailing free strands
  // change the closure.
  std::ostringstream text;
  text << w.strands << ":" << to_string(w) << "\n" << invariant << "\n" << engine << "\n" << kCacheVersion;
  return sha256_hex(text.str());
}

std::filesystem::path ResultCache::path_for(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<ScalarValue> ResultCache::get(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    return scalar_from_json(nlohmann::json::parse(in));
  } catch (const std::exception&) {
    // A corrupt entry is treated as a miss and overwritten on the next put.
    return std::nullopt;
  }
}

void ResultCache::put(const std::string& key, const ScalarValue& value) const {
  static std::atomic<unsigned> counter{0};
  const auto target = path_for(key);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << to_json(value).dump() << "\n";
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot install cache file " + target.string());
  }
}

}  // namespace theta
