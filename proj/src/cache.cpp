#include "k3char/cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3char/version.hpp"

namespace k3char {

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<std::size_t>(i)] = digits[v & 15];
  return out;
}

std::string CacheKey::file_stem() const {
  std::ostringstream os;
  os << "n" << n << "_d" << degree << "_" << family_letter(family) << rank << "_"
     << hex64(fnv1a64(kVersion));
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::path_for(const CacheKey& key) const {
  return dir_ / (key.file_stem() + ".json");
}

std::optional<std::string> ResultCache::load(const CacheKey& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json entry;
  try {
    entry = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!entry.is_object()) return std::nullopt;
  if (entry.value("schema", -1) != kCacheSchema) return std::nullopt;
  if (entry.value("version", std::string()) != kVersion) return std::nullopt;
  const auto& k = entry.find("key") != entry.end() ? entry["key"] : nlohmann::json();
  if (!k.is_object() || k.value("n", -1) != key.n || k.value("degree", -1) != key.degree ||
      k.value("family", std::string()) != std::string(1, family_letter(key.family)) ||
      k.value("rank", -1) != key.rank)
    return std::nullopt;
  if (!entry.contains("payload") || !entry["payload"].is_string()) return std::nullopt;
  std::string payload = entry["payload"].get<std::string>();
  if (entry.value("digest", std::string()) != hex64(fnv1a64(payload))) return std::nullopt;
  return payload;
}

void ResultCache::store(const CacheKey& key, const std::string& payload) const {
  nlohmann::ordered_json entry;
  entry["schema"] = kCacheSchema;
  entry["version"] = kVersion;
  entry["key"] = {{"n", key.n},
                  {"degree", key.degree},
                  {"family", std::string(1, family_letter(key.family))},
                  {"rank", key.rank}};
  entry["digest"] = hex64(fnv1a64(payload));
  entry["payload"] = payload;

  std::filesystem::path final_path = path_for(key);
  std::filesystem::path tmp = final_path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump(2) << "\n";
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, final_path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace k3char
