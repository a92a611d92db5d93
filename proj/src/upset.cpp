#include "multireg/upset.hpp"

#include <algorithm>
#include <stdexcept>

namespace multireg {

UpSet::UpSet(std::size_t k, std::vector<Multidegree> generators) : k_(k) {
  for (const auto& g : generators) {
    if (g.size() != k) throw std::invalid_argument("up-set generator has the wrong length");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    const bool dominated = std::any_of(generators.begin(), generators.end(), [&](const Multidegree& h) {
      return h != g && h.leq(g);
    });
    if (!dominated) corners_.push_back(g);
  }
}

bool UpSet::contains(const Multidegree& d) const {
  return std::any_of(corners_.begin(), corners_.end(),
                     [&](const Multidegree& c) { return c.leq(d); });
}

bool UpSet::contains(const UpSet& other) const {
  return std::all_of(other.corners_.begin(), other.corners_.end(),
                     [&](const Multidegree& c) { return contains(c); });
}

std::string UpSet::describe() const {
  if (corners_.empty()) return "empty";
  std::string out;
  for (const auto& c : corners_) {
    if (!out.empty()) out += " U ";
    out += c.to_string() + " + N^" + std::to_string(k_);
  }
  return out;
}

}  // namespace multireg
