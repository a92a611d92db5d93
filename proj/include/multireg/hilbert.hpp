#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "multireg/exact_linalg.hpp"
#include "multireg/fat_points.hpp"
#include "multireg/multigraded_ring.hpp"

namespace multireg {

/// Raised for operations restricted to particular shapes (k = 2, P^1 x P^1).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Label of one interpolation condition: the Taylor coefficient of order
/// `derivative` (over the N affine chart variables) at point `point`.
struct ConditionRow {
  std::size_t point;
  std::vector<int> derivative;
};

/// Interpolation matrix of Z in degree d. A form of degree d lies in
/// (I_Z)_d exactly when its coefficient vector is in the kernel.
///
/// Row (j, alpha) holds the alpha-th Taylor coefficient at P_j of each basis
/// monomial, dehomogenized in the chart where the largest-magnitude
/// coordinate of each factor of P_j is 1. Rows are scaled by the chart
/// denominators so every entry is an integer. Points appear in input order;
/// within a point, derivatives are ordered by total order, then descending
/// lexicographically. Columns follow monomial_basis().
struct ConditionMatrix {
  DenseMatrix matrix;
  std::vector<ConditionRow> rows;
  std::vector<Monomial> columns;
};

ConditionMatrix condition_matrix(const FatPointScheme& z, const Multidegree& d,
                                 const Field& field = Field::rational());

/// Memoized multigraded Hilbert function H_Z(d) = rank of the condition
/// matrix in degree d. Distinct multidegrees may be evaluated concurrently;
/// the memo never evicts.
class HilbertTable {
 public:
  explicit HilbertTable(FatPointScheme z, Field field = Field::rational());
  HilbertTable(const HilbertTable&) = delete;
  HilbertTable& operator=(const HilbertTable&) = delete;

  const FatPointScheme& scheme() const { return scheme_; }
  const Field& field() const { return field_; }
  /// The stabilized value deg Z.
  std::uint64_t degree() const { return degree_; }

  /// H_Z(d). Throws std::invalid_argument for d outside N^k.
  std::uint64_t value(const Multidegree& d) const;
  /// Evaluates every missing cell 0 <= d <= box, spread over worker threads.
  void fill_box(const Multidegree& box) const;
  /// Copy of every stored (d, H_Z(d)).
  std::map<Multidegree, std::uint64_t> stored() const;

 private:
  std::uint64_t compute(const Multidegree& d) const;

  FatPointScheme scheme_;
  Field field_;
  std::uint64_t degree_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Multidegree, std::uint64_t> memo_;
};

inline std::uint64_t hilbert_value(const HilbertTable& table, const Multidegree& d) {
  return table.value(d);
}

/// Values of H_Z on the box 0 <= d <= upper, in lexicographic order of d.
struct HilbertBox {
  Multidegree upper;
  std::vector<std::uint64_t> values;

  std::uint64_t at(const Multidegree& d) const;
};

HilbertBox hilbert_box(const HilbertTable& table, const Multidegree& upper);

/// N^1 coarsening: sum of H_Z(d) over d in N^k with |d| = t.
std::uint64_t coarse_hilbert(const HilbertTable& table, int t);

/// Mixed first difference of a bigraded Hilbert function on [0, rows) x [0, cols).
struct DifferenceTable {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int i, int j) const { return values[static_cast<std::size_t>(i * cols + j)]; }
};

/// Delta H(i,j) = H(i,j) - H(i-1,j) - H(i,j-1) + H(i-1,j-1) for (i,j) <= box,
/// with H = 0 at negative indices. Throws UnsupportedError unless k = 2.
DifferenceTable first_difference(const HilbertTable& table, const Multidegree& box);

/// CSV export. For k = 2, a matrix with the first coordinate as row index
/// and a header row of column indices; otherwise one line per multidegree.
std::string to_csv(const HilbertBox& box);

}  // namespace multireg
