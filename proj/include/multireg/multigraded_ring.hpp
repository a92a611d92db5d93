#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace multireg {

/// Factor dimensions (n_1, ..., n_k) of P^{n_1} x ... x P^{n_k}.
class SpaceShape {
 public:
  /// Throws std::invalid_argument when empty or when some n_i < 1.
  explicit SpaceShape(std::vector<int> factors);
  SpaceShape(std::initializer_list<int> factors) : SpaceShape(std::vector<int>(factors)) {}

  std::size_t k() const { return factors_.size(); }
  int n(std::size_t i) const { return factors_[i]; }
  const std::vector<int>& factors() const { return factors_; }
  /// N = n_1 + ... + n_k, the dimension of the product.
  int dimension() const;
  /// Number of homogeneous variables, N + k.
  int variable_count() const { return dimension() + static_cast<int>(k()); }

  friend bool operator==(const SpaceShape&, const SpaceShape&) = default;

 private:
  std::vector<int> factors_;
};

/// An element of Z^k; most call sites require N^k.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> coords) : coords_(std::move(coords)) {}
  Multidegree(std::initializer_list<int> coords) : coords_(coords) {}

  static Multidegree zero(std::size_t k) { return Multidegree(std::vector<int>(k, 0)); }
  static Multidegree constant(std::size_t k, int value) {
    return Multidegree(std::vector<int>(k, value));
  }
  /// Standard basis vector e_i (0-based).
  static Multidegree unit(std::size_t k, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_nonnegative() const;
  /// Componentwise order.
  bool leq(const Multidegree& other) const;

  Multidegree operator+(const Multidegree& other) const;
  Multidegree operator-(const Multidegree& other) const;
  Multidegree operator*(int scalar) const;

  /// "(1,2,3)"
  std::string to_string() const;

  friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

 private:
  std::vector<int> coords_;
};

/// Exponent vector over all N + k variables, grouped factor by factor as
/// (a_{1,0}, ..., a_{1,n_1}, ..., a_{k,0}, ..., a_{k,n_k}).
struct Monomial {
  std::vector<int> exponents;

  Multidegree multidegree(const SpaceShape& shape) const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::int64_t n, std::int64_t r);

/// dim_k R_d = prod_j C(n_j + d_j, n_j). Throws std::domain_error for
/// negative coordinates.
std::uint64_t dim_graded_piece(const SpaceShape& shape, const Multidegree& d);

/// All monomials of multidegree d, in descending lexicographic order of the
/// concatenated exponent vector (x_{1,0}^{d_1} ... first). This order is the
/// column order of every condition matrix.
std::vector<Monomial> monomial_basis(const SpaceShape& shape, const Multidegree& d);

/// N^1-degree d . (1, ..., 1).
int coarsen(const Multidegree& d);

/// Visits every d with 0 <= d <= box in lexicographic order.
template <class F>
void for_each_in_box(const Multidegree& box, F&& f) {
  const std::size_t k = box.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (box[i] < 0) return;
  }
  Multidegree d = Multidegree::zero(k);
  while (true) {
    f(static_cast<const Multidegree&>(d));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (d[i] < box[i]) {
        ++d[i];
        for (std::size_t j = i + 1; j < k; ++j) d[j] = 0;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace multireg
