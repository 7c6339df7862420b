#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "k3char/rootsystem.hpp"

namespace k3char {

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

struct CacheKey {
  int n = 0;
  int degree = 0;
  Family family = Family::B;
  int rank = 0;

  std::string file_stem() const;
};

// One JSON file per table, named by the key plus the code version hash so a
// rebuilt binary never reads entries produced by different algorithms. The
// stored payload carries its own digest; anything that fails validation is
// treated as a miss and recomputed.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  std::optional<std::string> load(const CacheKey& key) const;
  void store(const CacheKey& key, const std::string& payload) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const CacheKey& key) const;
  std::filesystem::path dir_;
};

}  // namespace k3char
