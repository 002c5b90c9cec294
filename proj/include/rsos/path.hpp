#pragma once

#include "rsos/model.hpp"

#include <string>
#include <vector>

namespace rsos {

/// Heights sigma_0 .. sigma_{N+1}; sigma_{N+1} is the boundary height c.
class RsosPath {
 public:
  RsosPath(ModelSpec spec, std::vector<int> heights);  // throws if inadmissible

  static bool admissible(const ModelSpec& spec, const std::vector<int>& heights);

  const ModelSpec& spec() const { return spec_; }
  const std::vector<int>& heights() const { return heights_; }
  int length() const { return static_cast<int>(heights_.size()) - 2; }  // N
  int operator[](int j) const { return heights_.at(static_cast<std::size_t>(j)); }

  bool operator==(const RsosPath&) const = default;

 private:
  ModelSpec spec_;
  std::vector<int> heights_;
};

std::string to_string(const RsosPath& p);  // "(3,1,3,3)"

}  // namespace rsos
