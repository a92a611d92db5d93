#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multireg/fat_points.hpp"
#include "multireg/hilbert.hpp"
#include "multireg/upset.hpp"

namespace multireg {

/// (r_1, ..., r_k) with r_i the regularity of the i-th projection.
struct ResolutionRegularityVector {
  Multidegree r;

  UpSet region() const { return UpSet(r.size(), {r}); }
};

/// d lies in reg_B(Z) iff H_Z(d) = deg Z.
bool membership(const HilbertTable& table, const Multidegree& d);

/// Corners of reg_B(Z), found by an exhaustive scan of the box [0, sigma]^k.
/// No corner lies outside this box, so the result is exact.
UpSet reg_region(const HilbertTable& table);

/// Least t with H_{Z_axis}(t) = deg Z_axis (axis is 0-based).
int proj_regularity(const FatPointScheme& z, std::size_t axis,
                    const Field& field = Field::rational());

ResolutionRegularityVector res_reg_vector(const FatPointScheme& z,
                                          const Field& field = Field::rational());

/// Union over a in N^k with |a| = m - 1 of p + m*1 - a + N^k; p + N^k when m = 0.
UpSet region_from_resvector(const Multidegree& p, int m);

/// Union over |a| = m - 1 of (r + m)*1 - a + N^k in N^k; r*1 + N^k when m = 0.
UpSet coarse_bound_region(int r, int m, std::size_t k);

struct DavisGeramitaBounds {
  /// (sigma - 1, ..., sigma - 1) + N^k.
  UpSet total;
  /// (l_1, ..., l_k) + N^k, only when the support is in generic position.
  std::optional<UpSet> generic;
};

/// Closed-form regions contained in reg_B(Z). The caller asserts generic
/// support through `generic_support`; this function does not check it.
DavisGeramitaBounds davis_geramita_bounds(const FatPointScheme& z, bool generic_support);

/// {(i,j) >= (m_1-1, m_1-1) : i + j >= max(sigma - 1, 2 m_1 - 2)} for fat
/// points in P^1 x P^1 with generic support. Multiplicities are sorted
/// descending internally.
UpSet p1xp1_generic_region(std::vector<int> multiplicities);

/// c_0, ..., c_{m_1-1} with c_j = sum_i [m_i + (m_i-1)_+ + ... + (m_i-j)_+].
std::vector<std::uint64_t> eventual_values(std::vector<int> multiplicities);

/// N^1 Hilbert polynomial of generic-support fat points in P^1 x P^1,
/// sum_i C(m_i+1, 2) (3t + 5 - 2 m_i) / 3, evaluated at t.
std::int64_t hilbert_polynomial_p1xp1(const std::vector<int>& multiplicities, std::int64_t t);

struct AcmVerdict {
  bool acm_consistent = true;
  std::optional<Multidegree> witness;
  std::int64_t witness_value = 0;
  std::string reason;  // empty when consistent
};

/// First-difference test on the box [0, sigma]^2: Delta H must take values in
/// {0, 1}, have down-closed support, and vanish on the outer rim of the box.
/// Throws UnsupportedError unless the shape is (1, 1).
AcmVerdict acm_check_p1xp1(const HilbertTable& table);

struct AcmEqualityReport {
  AcmVerdict verdict;
  ResolutionRegularityVector resvector;
  UpSet region;
  bool inclusion = false;  // resvector + N^k is inside reg_B(Z)
  bool equality = false;   // reg_B(Z) = resvector + N^k

  /// inclusion holds, and equality holds whenever the scheme is ACM-consistent.
  bool consistent() const { return inclusion && (!verdict.acm_consistent || equality); }
};

AcmEqualityReport verify_acm_equality(const HilbertTable& table);

}  // namespace multireg
