#include "multireg/multigraded_ring.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace multireg {

SpaceShape::SpaceShape(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("a space shape needs at least one factor");
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("projective factor dimensions must be >= 1");
  }
}

int SpaceShape::dimension() const { return std::accumulate(factors_.begin(), factors_.end(), 0); }

Multidegree Multidegree::unit(std::size_t k, std::size_t i) {
  Multidegree e = zero(k);
  e[i] = 1;
  return e;
}

bool Multidegree::is_nonnegative() const {
  for (int c : coords_) {
    if (c < 0) return false;
  }
  return true;
}

bool Multidegree::leq(const Multidegree& other) const {
  if (size() != other.size()) throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (coords_[i] > other[i]) return false;
  }
  return true;
}

Multidegree Multidegree::operator+(const Multidegree& other) const {
  if (size() != other.size()) throw std::invalid_argument("multidegree length mismatch");
  Multidegree r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] += other[i];
  return r;
}

Multidegree Multidegree::operator-(const Multidegree& other) const {
  if (size() != other.size()) throw std::invalid_argument("multidegree length mismatch");
  Multidegree r = *this;
  for (std::size_t i = 0; i < size(); ++i) r[i] -= other[i];
  return r;
}

Multidegree Multidegree::operator*(int scalar) const {
  Multidegree r = *this;
  for (auto& c : r.coords_) c *= scalar;
  return r;
}

std::string Multidegree::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Multidegree Monomial::multidegree(const SpaceShape& shape) const {
  Multidegree d = Multidegree::zero(shape.k());
  std::size_t offset = 0;
  for (std::size_t j = 0; j < shape.k(); ++j) {
    for (int v = 0; v <= shape.n(j); ++v) d[j] += exponents.at(offset++);
  }
  return d;
}

std::uint64_t binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i) / static_cast<unsigned __int128>(i);
    if (acc > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t dim_graded_piece(const SpaceShape& shape, const Multidegree& d) {
  if (d.size() != shape.k()) throw std::invalid_argument("multidegree length does not match shape");
  if (!d.is_nonnegative()) {
    throw std::domain_error("graded piece requested at negative multidegree " + d.to_string());
  }
  unsigned __int128 acc = 1;
  for (std::size_t j = 0; j < shape.k(); ++j) {
    acc *= binomial(shape.n(j) + d[j], shape.n(j));
    if (acc > UINT64_MAX) throw std::overflow_error("graded piece dimension exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

// Exponent vectors of length `parts` summing to `total`, descending lex.
void compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(const SpaceShape& shape, const Multidegree& d) {
  if (d.size() != shape.k()) throw std::invalid_argument("multidegree length does not match shape");
  if (!d.is_nonnegative()) {
    throw std::domain_error("monomial basis requested at negative multidegree " + d.to_string());
  }
  std::vector<Monomial> result{Monomial{}};
  for (std::size_t j = 0; j < shape.k(); ++j) {
    std::vector<std::vector<int>> block;
    std::vector<int> prefix;
    compositions(d[j], shape.n(j) + 1, prefix, block);
    std::vector<Monomial> next;
    next.reserve(result.size() * block.size());
    for (const auto& head : result) {
      for (const auto& tail : block) {
        Monomial m = head;
        m.exponents.insert(m.exponents.end(), tail.begin(), tail.end());
        next.push_back(std::move(m));
      }
    }
    result = std::move(next);
  }
  return result;
}

int coarsen(const Multidegree& d) { return std::accumulate(d.begin(), d.end(), 0); }

}  // namespace multireg
