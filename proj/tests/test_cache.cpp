#include "rsos/cache.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

using namespace rsos;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("rsos_test_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

CacheKey sample_key() {
  CacheKey k;
  k.m = 2;
  k.m_prime = 5;
  k.a = k.b = k.c = 3;
  k.N = 2;
  k.method = "recursive";
  return k;
}

}  // namespace

TEST_CASE("cache file names") {
  CHECK(sample_key().file_name() == "v1_m2_mp5_n2_a3_b3_c3_N2_recursive.json");
}

TEST_CASE("cache round trip") {
  TempDir dir("roundtrip");
  const SeriesCache cache(dir.path);
  const CacheKey key = sample_key();
  CHECK(!cache.get(key).has_value());
  const QSeries x = testutil::series({{2, 1}, {10, 3}});
  cache.put(key, x);
  REQUIRE(cache.get(key).has_value());
  CHECK(*cache.get(key) == x);
  CacheKey other = key;
  other.N = 3;
  CHECK(!cache.get(other).has_value());
  CacheKey bumped = key;
  bumped.format_version = 2;
  CHECK(!cache.get(bumped).has_value());
}

TEST_CASE("bad entries are misses with a warning") {
  TempDir dir("bad");
  std::ostringstream warn;
  const SeriesCache cache(dir.path, &warn);
  const CacheKey key = sample_key();
  {
    std::ofstream(dir.path / key.file_name()) << "{\"format_version\": 1, \"key\": ";
  }
  CHECK(!cache.get(key).has_value());
  CHECK(warn.str().find("corrupt cache entry") != std::string::npos);

  warn.str("");
  {
    std::ofstream(dir.path / key.file_name()) << R"({"format_version": 0, "key": {}, "series": []})";
  }
  CHECK(!cache.get(key).has_value());
  CHECK(warn.str().find("format version") != std::string::npos);

  warn.str("");
  CacheKey other = key;
  other.a = 1;
  cache.put(other, QSeries::one());
  fs::copy_file(dir.path / other.file_name(), dir.path / key.file_name(), fs::copy_options::overwrite_existing);
  CHECK(!cache.get(key).has_value());
  CHECK(warn.str().find("mismatched key") != std::string::npos);
}

TEST_CASE("concurrent writers leave a readable entry") {
  TempDir dir("threads");
  std::ostringstream warn;
  const SeriesCache cache(dir.path, &warn);
  const CacheKey key = sample_key();
  const QSeries x = testutil::series({{0, 1}, {4, 1}});
  std::atomic<int> bad{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < 6; ++t)
    pool.emplace_back([&] {
      for (int i = 0; i < 25; ++i) {
        cache.put(key, x);
        const auto got = cache.get(key);
        if (!got || !(*got == x)) ++bad;
      }
    });
  for (auto& th : pool) th.join();
  CHECK(bad == 0);
  CHECK(warn.str().empty());
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir.path)) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);
}
