#include "rsos/path.hpp"

#include <stdexcept>

namespace rsos {

bool RsosPath::admissible(const ModelSpec& spec, const std::vector<int>& heights) {
  if (heights.size() < 2) return false;
  for (std::size_t j = 0; j + 1 < heights.size(); ++j) {
    if (!adjacent(spec, heights[j], heights[j + 1])) return false;
  }
  return true;
}

RsosPath::RsosPath(ModelSpec spec, std::vector<int> heights) : spec_(spec), heights_(std::move(heights)) {
  if (!admissible(spec_, heights_)) {
    throw std::invalid_argument("inadmissible path " + to_string(*this) + " for " + describe(spec_));
  }
}

std::string to_string(const RsosPath& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.heights().size(); ++j) {
    if (j) out += ",";
    out += std::to_string(p.heights()[j]);
  }
  return out + ")";
}

}  // namespace rsos
