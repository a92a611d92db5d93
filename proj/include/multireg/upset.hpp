#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "multireg/multigraded_ring.hpp"

namespace multireg {

/// A subset of N^k closed under adding e_j, stored as its antichain of
/// minimal corners in lexicographic order.
class UpSet {
 public:
  explicit UpSet(std::size_t k) : k_(k) {}
  /// Keeps only the minimal generators; duplicates and dominated entries are
  /// dropped. Throws std::invalid_argument on a length mismatch.
  UpSet(std::size_t k, std::vector<Multidegree> generators);

  std::size_t ambient() const { return k_; }
  const std::vector<Multidegree>& corners() const { return corners_; }
  bool empty() const { return corners_.empty(); }

  bool contains(const Multidegree& d) const;
  /// Subset test: every corner of `other` lies in this set.
  bool contains(const UpSet& other) const;

  /// "(2,2) + N^2", unions joined with " U "; "empty" for no corners.
  std::string describe() const;

  friend bool operator==(const UpSet&, const UpSet&) = default;

 private:
  std::size_t k_;
  std::vector<Multidegree> corners_;
};

}  // namespace multireg
