#include "multireg/regularity.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace multireg {

namespace {

// Every a in N^k with |a| = total.
std::vector<Multidegree> vectors_with_sum(std::size_t k, int total) {
  std::vector<Multidegree> out;
  if (total < 0) return out;
  for_each_in_box(Multidegree::constant(k, total), [&](const Multidegree& a) {
    if (coarsen(a) == total) out.push_back(a);
  });
  return out;
}

std::vector<int> sorted_descending(std::vector<int> m) {
  if (m.empty()) throw std::invalid_argument("at least one multiplicity is required");
  for (int v : m) {
    if (v < 1) throw std::invalid_argument("multiplicities must be >= 1");
  }
  std::sort(m.begin(), m.end(), std::greater<>());
  return m;
}

}  // namespace

bool membership(const HilbertTable& table, const Multidegree& d) {
  return table.value(d) == table.degree();
}

UpSet reg_region(const HilbertTable& table) {
  const std::size_t k = table.scheme().shape().k();
  const Multidegree box = Multidegree::constant(k, table.scheme().multiplicity_sum());
  table.fill_box(box);
  std::vector<Multidegree> corners;
  for_each_in_box(box, [&](const Multidegree& d) {
    if (!membership(table, d)) return;
    for (std::size_t j = 0; j < k; ++j) {
      if (d[j] > 0 && membership(table, d - Multidegree::unit(k, j))) return;
    }
    corners.push_back(d);
  });
  return UpSet(k, std::move(corners));
}

int proj_regularity(const FatPointScheme& z, std::size_t axis, const Field& field) {
  HilbertTable image(project(z, axis), field);
  const int bound = image.scheme().multiplicity_sum();
  for (int t = 0; t <= bound; ++t) {
    if (image.value(Multidegree{t}) == image.degree()) return t;
  }
  throw std::logic_error("projected Hilbert function did not stabilize within its degree bound");
}

ResolutionRegularityVector res_reg_vector(const FatPointScheme& z, const Field& field) {
  Multidegree r = Multidegree::zero(z.shape().k());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = proj_regularity(z, i, field);
  return ResolutionRegularityVector{r};
}

UpSet region_from_resvector(const Multidegree& p, int m) {
  const std::size_t k = p.size();
  if (m < 0) throw std::invalid_argument("projective-dimension bound must be >= 0");
  if (!p.is_nonnegative()) throw std::invalid_argument("base point must lie in N^k");
  if (m == 0) return UpSet(k, {p});
  std::vector<Multidegree> corners;
  const Multidegree shifted = p + Multidegree::constant(k, m);
  for (const auto& a : vectors_with_sum(k, m - 1)) corners.push_back(shifted - a);
  return UpSet(k, std::move(corners));
}

UpSet coarse_bound_region(int r, int m, std::size_t k) {
  if (r < 0) throw std::invalid_argument("regularity bound must be >= 0");
  return region_from_resvector(Multidegree::constant(k, r), m);
}

DavisGeramitaBounds davis_geramita_bounds(const FatPointScheme& z, bool generic_support) {
  const auto m = sorted_descending(z.multiplicities());
  const int sigma = z.multiplicity_sum();
  const std::size_t k = z.shape().k();
  DavisGeramitaBounds bounds{UpSet(k, {Multidegree::constant(k, sigma - 1)}), std::nullopt};
  if (generic_support) {
    const int m2 = m.size() > 1 ? m[1] : 0;
    Multidegree ell = Multidegree::zero(k);
    for (std::size_t i = 0; i < k; ++i) {
      const int n = z.shape().n(i);
      const int ceiling = (sigma + n - 2 + n - 1) / n;
      ell[i] = std::max(m[0] + m2 + 1, ceiling);
    }
    bounds.generic = UpSet(k, {ell});
  }
  return bounds;
}

UpSet p1xp1_generic_region(std::vector<int> multiplicities) {
  const auto m = sorted_descending(std::move(multiplicities));
  int sigma = 0;
  for (int v : m) sigma += v;
  const int low = m[0] - 1;
  const int ell = std::max(sigma - 1, 2 * m[0] - 2);
  std::vector<Multidegree> corners;
  for (int i = low; i <= ell - low; ++i) corners.push_back(Multidegree{i, ell - i});
  return UpSet(2, std::move(corners));
}

std::vector<std::uint64_t> eventual_values(std::vector<int> multiplicities) {
  const auto m = sorted_descending(std::move(multiplicities));
  std::vector<std::uint64_t> c;
  for (int j = 0; j < m[0]; ++j) {
    std::uint64_t total = 0;
    for (int mi : m) {
      for (int t = 0; t <= j; ++t) total += static_cast<std::uint64_t>(std::max(0, mi - t));
    }
    c.push_back(total);
  }
  return c;
}

std::int64_t hilbert_polynomial_p1xp1(const std::vector<int>& multiplicities, std::int64_t t) {
  if (multiplicities.empty()) throw std::invalid_argument("at least one multiplicity is required");
  // Accumulate 3 * HP(t) so every term stays integral.
  std::int64_t thrice = 0;
  for (int mi : multiplicities) {
    if (mi < 1) throw std::invalid_argument("multiplicities must be >= 1");
    const auto c = static_cast<std::int64_t>(binomial(mi + 1, 2));
    thrice += c * (3 * t + 5 - 2 * mi);
  }
  if (thrice % 3 != 0) throw std::logic_error("Hilbert polynomial evaluated to a non-integer");
  return thrice / 3;
}

AcmVerdict acm_check_p1xp1(const HilbertTable& table) {
  if (!(table.scheme().shape() == SpaceShape{1, 1})) {
    throw UnsupportedError("the ACM check is implemented for P^1 x P^1 only");
  }
  const int sigma = table.scheme().multiplicity_sum();
  const DifferenceTable diff = first_difference(table, Multidegree{sigma, sigma});
  AcmVerdict verdict;
  auto fail = [&](int i, int j, std::string reason) {
    verdict.acm_consistent = false;
    verdict.witness = Multidegree{i, j};
    verdict.witness_value = diff.at(i, j);
    verdict.reason = std::move(reason);
  };
  for (int i = 0; i <= sigma && verdict.acm_consistent; ++i) {
    for (int j = 0; j <= sigma && verdict.acm_consistent; ++j) {
      const std::int64_t v = diff.at(i, j);
      if (v != 0 && v != 1) {
        fail(i, j, "first difference outside {0,1}");
      } else if (v != 0 && ((i > 0 && diff.at(i - 1, j) == 0) || (j > 0 && diff.at(i, j - 1) == 0))) {
        fail(i, j, "support of first difference is not down-closed");
      } else if (v != 0 && (i == sigma || j == sigma)) {
        fail(i, j, "first difference does not vanish on the box rim");
      }
    }
  }
  return verdict;
}

AcmEqualityReport verify_acm_equality(const HilbertTable& table) {
  AcmEqualityReport report{acm_check_p1xp1(table), res_reg_vector(table.scheme(), table.field()),
                           reg_region(table)};
  report.inclusion = membership(table, report.resvector.r);
  report.equality = report.region == report.resvector.region();
  return report;
}

}  // namespace multireg
