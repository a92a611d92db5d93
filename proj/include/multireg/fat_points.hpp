#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "multireg/multigraded_ring.hpp"

namespace multireg {

class HilbertTable;

/// A point of P^{n_1} x ... x P^{n_k} with integer homogeneous coordinates,
/// stored canonically: each factor vector is primitive and its first
/// nonzero entry is positive.
class MultiPoint {
 public:
  /// Throws std::invalid_argument for an empty or zero factor vector.
  explicit MultiPoint(std::vector<std::vector<std::int64_t>> factors);

  std::size_t k() const { return factors_.size(); }
  const std::vector<std::int64_t>& factor(std::size_t j) const { return factors_[j]; }
  const std::vector<std::vector<std::int64_t>>& factors() const { return factors_; }

  friend auto operator<=>(const MultiPoint&, const MultiPoint&) = default;

 private:
  std::vector<std::vector<std::int64_t>> factors_;
};

struct FatPoint {
  MultiPoint point;
  int multiplicity = 1;
};

/// Z = m_1 P_1 + ... + m_s P_s.
class FatPointScheme {
 public:
  /// Validates coordinate lengths against the shape, s >= 1, m_j >= 1 and
  /// pairwise distinct support. Throws std::invalid_argument otherwise.
  FatPointScheme(SpaceShape shape, std::vector<FatPoint> points);

  const SpaceShape& shape() const { return shape_; }
  const std::vector<FatPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

  std::vector<int> multiplicities() const;
  /// sigma = m_1 + ... + m_s.
  int multiplicity_sum() const;
  bool is_reduced() const;
  /// The support with every multiplicity set to 1.
  FatPointScheme support() const;

 private:
  SpaceShape shape_;
  std::vector<FatPoint> points_;
};

/// deg Z = sum_i C(N + m_i - 1, m_i - 1).
std::uint64_t degree(const FatPointScheme& z);

/// Image of z in the single factor P^{n_axis} (axis is 0-based). Points
/// with a common image merge, keeping the largest multiplicity.
FatPointScheme project(const FatPointScheme& z, std::size_t axis);

struct GenericPositionResult {
  bool generic = true;
  std::optional<Multidegree> first_failure;
  std::uint64_t observed = 0;  // H_Z at the failure
  std::uint64_t expected = 0;  // min(dim R_d, s) at the failure
};

/// Checks H_Z(d) = min(dim R_d, s) for every 0 <= d <= box (lexicographic
/// scan). Throws std::invalid_argument for a nonreduced scheme.
GenericPositionResult generic_position_check(const HilbertTable& table, const Multidegree& box);
GenericPositionResult generic_position_check(const FatPointScheme& z, const Multidegree& box);
/// Default box (sigma, ..., sigma).
GenericPositionResult generic_position_check(const FatPointScheme& z);

/// Random scheme with coordinates uniform in [-10^6, 10^6]. Every factor
/// projection is injective on the support. Deterministic in `seed`.
FatPointScheme random_scheme(const SpaceShape& shape, const std::vector<int>& multiplicities,
                             std::uint64_t seed);

}  // namespace multireg
