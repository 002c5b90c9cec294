#pragma once

#include "rsos/qseries.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace rsos {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
  int format_version = kCacheFormatVersion;
  int m = 0, m_prime = 0, fusion = 2;
  int a = 0, b = 0, c = 0, N = 0;
  std::string method;

  std::string file_name() const;
};

/// One JSON file per key.  Writes go to a temporary file that is renamed
/// over the target, so readers never see a partial entry.
class SeriesCache {
 public:
  /// Warnings about unreadable entries go to `warn` when given.
  explicit SeriesCache(std::filesystem::path dir, std::ostream* warn = nullptr);

  const std::filesystem::path& dir() const { return dir_; }

  /// Miss on absent, corrupt or version-mismatched entries.
  std::optional<QSeries> get(const CacheKey& key) const;
  void put(const CacheKey& key, const QSeries& series) const;

 private:
  std::filesystem::path dir_;
  std::ostream* warn_;
};

}  // namespace rsos
