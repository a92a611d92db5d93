#include "multireg/fat_points.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "multireg/hilbert.hpp"

namespace multireg {

namespace {

std::vector<std::int64_t> canonical_factor(std::vector<std::int64_t> v) {
  if (v.empty()) throw std::invalid_argument("empty coordinate vector");
  std::int64_t g = 0;
  for (auto c : v) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("coordinate vector of a point must be nonzero");
  const auto first = std::find_if(v.begin(), v.end(), [](std::int64_t c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

}  // namespace

MultiPoint::MultiPoint(std::vector<std::vector<std::int64_t>> factors) {
  if (factors.empty()) throw std::invalid_argument("a point needs at least one factor");
  factors_.reserve(factors.size());
  for (auto& f : factors) factors_.push_back(canonical_factor(std::move(f)));
}

FatPointScheme::FatPointScheme(SpaceShape shape, std::vector<FatPoint> points)
    : shape_(std::move(shape)), points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("a fat point scheme needs at least one point");
  std::set<MultiPoint> seen;
  for (const auto& fp : points_) {
    if (fp.multiplicity < 1) throw std::invalid_argument("multiplicities must be >= 1");
    if (fp.point.k() != shape_.k()) {
      throw std::invalid_argument("point has the wrong number of factors");
    }
    for (std::size_t j = 0; j < shape_.k(); ++j) {
      if (fp.point.factor(j).size() != static_cast<std::size_t>(shape_.n(j)) + 1) {
        throw std::invalid_argument("coordinate vector length does not match factor dimension");
      }
    }
    if (!seen.insert(fp.point).second) throw std::invalid_argument("points must be distinct");
  }
}

std::vector<int> FatPointScheme::multiplicities() const {
  std::vector<int> m;
  m.reserve(points_.size());
  for (const auto& fp : points_) m.push_back(fp.multiplicity);
  return m;
}

int FatPointScheme::multiplicity_sum() const {
  int s = 0;
  for (const auto& fp : points_) s += fp.multiplicity;
  return s;
}

bool FatPointScheme::is_reduced() const {
  return std::all_of(points_.begin(), points_.end(),
                     [](const FatPoint& fp) { return fp.multiplicity == 1; });
}

FatPointScheme FatPointScheme::support() const {
  std::vector<FatPoint> pts = points_;
  for (auto& fp : pts) fp.multiplicity = 1;
  return FatPointScheme(shape_, std::move(pts));
}

std::uint64_t degree(const FatPointScheme& z) {
  const int n = z.shape().dimension();
  std::uint64_t total = 0;
  for (const auto& fp : z.points()) total += binomial(n + fp.multiplicity - 1, fp.multiplicity - 1);
  return total;
}

FatPointScheme project(const FatPointScheme& z, std::size_t axis) {
  if (axis >= z.shape().k()) throw std::invalid_argument("projection axis out of range");
  // I_P^a intersected with I_P^b is I_P^max(a,b).
  std::map<std::vector<std::int64_t>, int> images;
  std::vector<std::vector<std::int64_t>> order;
  for (const auto& fp : z.points()) {
    const auto& image = fp.point.factor(axis);
    auto [it, inserted] = images.try_emplace(image, fp.multiplicity);
    if (inserted) {
      order.push_back(image);
    } else {
      it->second = std::max(it->second, fp.multiplicity);
    }
  }
  std::vector<FatPoint> pts;
  pts.reserve(order.size());
  for (const auto& image : order) pts.push_back(FatPoint{MultiPoint({image}), images[image]});
  return FatPointScheme(SpaceShape({z.shape().n(axis)}), std::move(pts));
}

GenericPositionResult generic_position_check(const HilbertTable& table, const Multidegree& box) {
  const FatPointScheme& z = table.scheme();
  if (!z.is_reduced()) {
    throw std::invalid_argument("generic position is defined for reduced schemes only");
  }
  if (!box.is_nonnegative() || box.size() != z.shape().k()) {
    throw std::invalid_argument("generic position box must be a nonnegative multidegree");
  }
  const std::uint64_t s = z.size();
  table.fill_box(box);
  GenericPositionResult result;
  for_each_in_box(box, [&](const Multidegree& d) {
    if (!result.generic) return;
    const std::uint64_t expected = std::min(dim_graded_piece(z.shape(), d), s);
    const std::uint64_t observed = table.value(d);
    if (observed != expected) {
      result.generic = false;
      result.first_failure = d;
      result.observed = observed;
      result.expected = expected;
    }
  });
  return result;
}

GenericPositionResult generic_position_check(const FatPointScheme& z, const Multidegree& box) {
  HilbertTable table(z);
  return generic_position_check(table, box);
}

GenericPositionResult generic_position_check(const FatPointScheme& z) {
  return generic_position_check(z, Multidegree::constant(z.shape().k(), z.multiplicity_sum()));
}

FatPointScheme random_scheme(const SpaceShape& shape, const std::vector<int>& multiplicities,
                             std::uint64_t seed) {
  if (multiplicities.empty()) throw std::invalid_argument("random scheme needs at least one point");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
  std::vector<std::set<std::vector<std::int64_t>>> used(shape.k());
  std::vector<FatPoint> pts;
  pts.reserve(multiplicities.size());
  for (int m : multiplicities) {
    std::vector<std::vector<std::int64_t>> factors;
    for (std::size_t j = 0; j < shape.k(); ++j) {
      while (true) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(shape.n(j)) + 1);
        for (auto& c : v) c = coord(rng);
        if (std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; })) continue;
        v = canonical_factor(std::move(v));
        if (used[j].insert(v).second) {
          factors.push_back(std::move(v));
          break;
        }
      }
    }
    pts.push_back(FatPoint{MultiPoint(std::move(factors)), m});
  }
  return FatPointScheme(shape, std::move(pts));
}

}  // namespace multireg
