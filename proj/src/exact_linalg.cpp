#include "multireg/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace multireg {

namespace {

// 2^61 - 1, used only to certify full-rank integer matrices.
constexpr std::uint64_t kCertificatePrime = (1ULL << 61) - 1;

}  // namespace

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero residue");
  return pow(a, p - 2, p);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t p) {
  const auto sp = static_cast<std::int64_t>(p);
  std::int64_t r = a % sp;
  if (r < 0) r += sp;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t reduce(const mpz_class& a, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

}  // namespace modp

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p <= (1ULL << 30) || p >= (1ULL << 62) || !is_prime(p)) {
    throw std::invalid_argument("field modulus must be a prime in (2^30, 2^62), got " +
                                std::to_string(p));
  }
  return Field{p};
}

std::string Field::describe() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

FieldElement FieldElement::rational(mpq_class q) {
  q.canonicalize();
  return FieldElement{std::move(q)};
}

FieldElement FieldElement::residue(std::uint64_t value, std::uint64_t p) {
  return FieldElement{Residue{value % p, p}};
}

FieldElement FieldElement::integer(const mpz_class& z, const Field& field) {
  if (field.is_rational()) return FieldElement{mpq_class(z)};
  return residue(modp::reduce(z, field.modulus()), field.modulus());
}

Field FieldElement::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Field{r->p};
  return Field::rational();
}

bool FieldElement::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

const mpq_class& FieldElement::as_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw std::invalid_argument("field element is not rational");
}

std::uint64_t FieldElement::as_residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw std::invalid_argument("field element is not a residue");
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.v_)) return *q == std::get<mpq_class>(b.v_);
  const auto& ra = std::get<FieldElement::Residue>(a.v_);
  const auto& rb = std::get<FieldElement::Residue>(b.v_);
  return ra.p == rb.p && ra.value == rb.value;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("matrix entry count does not match its shape");
  }
}

DenseMatrix DenseMatrix::transpose() const {
  std::vector<FieldElement> t;
  t.reserve(entries_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) t.push_back((*this)(r, c));
  }
  return DenseMatrix(cols_, rows_, std::move(t));
}

std::size_t rank_mod_p(std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols,
                       std::uint64_t p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const std::uint64_t inv = modp::inverse(a[rank * cols + c], p);
    const std::uint64_t* prow = &a[rank * cols];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint64_t* row = &a[r * cols];
      if (row[c] == 0) continue;
      const std::uint64_t f = modp::mul(row[c], inv, p);
      row[c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (prow[j] == 0) continue;
        const std::uint64_t sub = modp::mul(f, prow[j], p);
        row[j] = row[j] >= sub ? row[j] - sub : row[j] + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

namespace {

std::size_t bareiss_rank(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot * cols + c]) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const mpz_class& piv = a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      mpz_class* row = &a[r * cols];
      const mpz_class lead = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // row[j] = (piv * row[j] - lead * prow[j]) / prev, exact
        mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), piv.get_mpz_t());
        if (sgn(lead) != 0) {
          mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), a[rank * cols + j].get_mpz_t());
          mpz_sub(row[j].get_mpz_t(), row[j].get_mpz_t(), t.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_integer(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::uint64_t> reduced(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    reduced[i] = modp::reduce(entries[i], kCertificatePrime);
  }
  const std::size_t modular = rank_mod_p(std::move(reduced), rows, cols, kCertificatePrime);
  if (modular == std::min(rows, cols)) return modular;
  return rank_bareiss(std::move(entries), rows, cols);
}

std::size_t rank_bareiss(std::vector<mpz_class> entries, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  // Bareiss touches rows*rows*cols entries; eliminate along the short side.
  if (cols < rows) {
    std::vector<mpz_class> t(entries.size());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) t[c * rows + r] = std::move(entries[r * cols + c]);
    }
    return bareiss_rank(t, cols, rows);
  }
  return bareiss_rank(entries, rows, cols);
}

std::size_t rank(const DenseMatrix& m) {
  const auto entries = m.entries();
  if (entries.empty()) return 0;
  const Field field = entries.front().field();
  for (const auto& e : entries) {
    if (!(e.field() == field)) throw std::invalid_argument("matrix mixes entries of different fields");
  }
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (!field.is_rational()) {
    std::vector<std::uint64_t> a(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) a[i] = entries[i].as_residue();
    return rank_mod_p(std::move(a), rows, cols, field.modulus());
  }
  // Clearing denominators row by row leaves the row space unchanged.
  std::vector<mpz_class> a(entries.size());
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).as_rational().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const mpq_class& q = m(r, c).as_rational();
      a[r * cols + c] = q.get_num() * (scale / q.get_den());
    }
  }
  return rank_integer(std::move(a), rows, cols);
}

}  // namespace multireg
