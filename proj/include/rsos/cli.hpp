#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rsos {

struct RunConfig {
  std::string subcommand;
  int m = 0, m_prime = 0, fusion = 2;
  int a = 0, b = 0, c = 0, N = 0;
  int r = 1, s = 1, K = 15;
  int p = 0, p_prime = 0;
  int k = 1;
  int sites = 4;
  int samples = 20;
  double t = 0;
  unsigned seed = 1;
  std::string method = "recursive";
  std::string kind = "bosonic";
  std::string table = "nonnegative";
  std::string source = "closed";
  bool count_only = false;
  bool all_n = false;
  std::string format;  // json or csv; empty picks the subcommand default
  std::string cache_dir;
  int jobs = 1;
  std::optional<double> tol;
};

/// Exit codes: 0 all checks pass, 1 a check failed (failures listed on err),
/// 2 invalid invocation or parameters.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rsos
