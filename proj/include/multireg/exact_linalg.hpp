#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace multireg {

/// Default prime for the modular fast path (2^31 - 1).
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

bool is_prime(std::uint64_t n);

/// Scalar field descriptor: either Q or F_p with 2^30 < p < 2^62.
class Field {
 public:
  static Field rational() { return Field{}; }
  /// Throws std::invalid_argument unless p is a prime in (2^30, 2^62).
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  Field() = default;
  explicit Field(std::uint64_t p) : p_(p) {}

  std::uint64_t p_ = 0;  // 0 encodes Q
};

/// An exact scalar. Rationals are kept canonical (reduced, positive
/// denominator); residues satisfy 0 <= value < p.
class FieldElement {
 public:
  static FieldElement rational(mpq_class q);
  static FieldElement residue(std::uint64_t value, std::uint64_t p);
  /// Maps an integer into `field`.
  static FieldElement integer(const mpz_class& z, const Field& field);

  Field field() const;
  bool is_zero() const;
  const mpq_class& as_rational() const;
  std::uint64_t as_residue() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t p;
  };
  explicit FieldElement(std::variant<mpq_class, Residue> v) : v_(std::move(v)) {}

  std::variant<mpq_class, Residue> v_;
};

/// Row-major dense matrix of field elements.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Throws std::invalid_argument if entries.size() != rows * cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const FieldElement> entries() const { return entries_; }

  DenseMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

/// Rank over the field of the entries. Throws std::invalid_argument when
/// entries belong to different fields.
std::size_t rank(const DenseMatrix& m);

/// Rank of a row-major integer matrix over Q. Fraction-free (Bareiss)
/// elimination; a full-rank result modulo a 61-bit prime is accepted as a
/// certificate, since rank mod p never exceeds the rank over Q.
std::size_t rank_integer(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols);

/// Plain Bareiss elimination without the modular certificate.
std::size_t rank_bareiss(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols);

/// Rank over F_p of a row-major matrix of residues in [0, p).
std::size_t rank_mod_p(std::vector<std::uint64_t> entries, std::size_t rows, std::size_t cols,
                       std::uint64_t p);

namespace modp {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(std::int64_t a, std::uint64_t p);
std::uint64_t reduce(const mpz_class& a, std::uint64_t p);

}  // namespace modp

}  // namespace multireg
