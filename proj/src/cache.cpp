#include "rsos/cache.hpp"

#include "rsos/json_io.hpp"

#include <atomic>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include <unistd.h>

namespace rsos {

namespace {

nlohmann::json key_json(const CacheKey& k) {
  return {{"m", k.m}, {"m_prime", k.m_prime}, {"fusion", k.fusion}, {"a", k.a},
          {"b", k.b}, {"c", k.c},             {"N", k.N},           {"method", k.method}};
}

}  // namespace

std::string CacheKey::file_name() const {
  std::ostringstream os;
  os << "v" << format_version << "_m" << m << "_mp" << m_prime << "_n" << fusion << "_a" << a << "_b" << b << "_c" << c
     << "_N" << N << "_" << method << ".json";
  return os.str();
}

SeriesCache::SeriesCache(std::filesystem::path dir, std::ostream* warn) : dir_(std::move(dir)), warn_(warn) {
  std::filesystem::create_directories(dir_);
}

std::optional<QSeries> SeriesCache::get(const CacheKey& key) const {
  const auto path = dir_ / key.file_name();
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format_version").get<int>() != key.format_version) {
      if (warn_) *warn_ << "warning: cache entry " << path.string() << " has another format version, recomputing\n";
      return std::nullopt;
    }
    if (doc.at("key") != key_json(key)) {
      if (warn_) *warn_ << "warning: cache entry " << path.string() << " has a mismatched key, recomputing\n";
      return std::nullopt;
    }
    return qseries_from_json(doc.at("series"));
  } catch (const std::exception& e) {
    if (warn_) *warn_ << "warning: corrupt cache entry " << path.string() << " (" << e.what() << "), recomputing\n";
    return std::nullopt;
  }
}

void SeriesCache::put(const CacheKey& key, const QSeries& series) const {
  static std::atomic<unsigned long> counter{0};
  const nlohmann::json doc = {{"format_version", key.format_version}, {"key", key_json(key)}, {"series", to_json(series)}};
  const auto target = dir_ / key.file_name();
  std::ostringstream tmp_name;
  tmp_name << "." << key.file_name() << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << "." << counter++;
  const auto tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace rsos
