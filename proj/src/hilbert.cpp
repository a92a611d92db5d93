#include "multireg/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace multireg {

namespace {

struct IntegerRing {
  using Value = mpz_class;
  Value from_int(std::int64_t v) const { return Value(static_cast<long>(v)); }
  void mul(Value& acc, const Value& x) const { mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t()); }
  void mul_int(Value& acc, std::uint64_t x) const {
    mpz_mul_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(x));
  }
};

struct ModRing {
  using Value = std::uint64_t;
  std::uint64_t p;
  Value from_int(std::int64_t v) const { return modp::reduce(v, p); }
  void mul(Value& acc, const Value& x) const { acc = modp::mul(acc, x, p); }
  void mul_int(Value& acc, std::uint64_t x) const { acc = modp::mul(acc, x % p, p); }
};

// Multi-indices of length n with total <= max_order, ordered by total then
// descending lex.
std::vector<std::vector<int>> derivative_orders(int n, int max_order) {
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= max_order; ++total) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    // Enumerate compositions of `total` into n parts, descending lex.
    std::vector<std::vector<int>> level;
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
      if (pos == n - 1) {
        a[static_cast<std::size_t>(pos)] = remaining;
        level.push_back(a);
        return;
      }
      for (int v = remaining; v >= 0; --v) {
        a[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, remaining - v);
      }
    };
    if (n == 0) {
      if (total == 0) level.push_back({});
    } else {
      rec(rec, 0, total);
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

template <class Ring>
std::vector<typename Ring::Value> condition_entries(const FatPointScheme& z, const Multidegree& d,
                                                    const std::vector<Monomial>& columns,
                                                    const Ring& ring,
                                                    std::vector<ConditionRow>* labels) {
  using Value = typename Ring::Value;
  const SpaceShape& shape = z.shape();
  const std::size_t k = shape.k();
  const int n_affine = shape.dimension();

  // Offsets of each factor inside the concatenated exponent vector.
  std::vector<std::size_t> offset(k + 1, 0);
  for (std::size_t f = 0; f < k; ++f) offset[f + 1] = offset[f] + static_cast<std::size_t>(shape.n(f)) + 1;

  std::vector<Value> entries;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const MultiPoint& point = z.points()[j].point;
    const int m = z.points()[j].multiplicity;

    // Chart: per factor, the coordinate of largest magnitude (first on ties).
    std::vector<std::size_t> chart(k);
    // powers[v][e] = a_v^e for every homogeneous variable v.
    std::vector<std::vector<Value>> powers(offset[k]);
    for (std::size_t f = 0; f < k; ++f) {
      const auto& coords = point.factor(f);
      std::size_t best = 0;
      for (std::size_t i = 1; i < coords.size(); ++i) {
        if (std::llabs(coords[i]) > std::llabs(coords[best])) best = i;
      }
      chart[f] = best;
      for (std::size_t i = 0; i < coords.size(); ++i) {
        auto& table = powers[offset[f] + i];
        table.reserve(static_cast<std::size_t>(d[f]) + 1);
        table.push_back(ring.from_int(1));
        const Value base = ring.from_int(coords[i]);
        for (int e = 1; e <= d[f]; ++e) {
          Value next = table.back();
          ring.mul(next, base);
          table.push_back(std::move(next));
        }
      }
    }

    // Affine variable index -> (factor, homogeneous variable).
    std::vector<std::pair<std::size_t, std::size_t>> affine;
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(shape.n(f)); ++i) {
        if (i != chart[f]) affine.emplace_back(f, offset[f] + i);
      }
    }

    for (const auto& alpha : derivative_orders(n_affine, m - 1)) {
      if (labels) labels->push_back(ConditionRow{j, alpha});
      std::vector<int> order_in_factor(k, 0);
      for (std::size_t a = 0; a < affine.size(); ++a) order_in_factor[affine[a].first] += alpha[a];

      for (const auto& mono : columns) {
        const auto& beta = mono.exponents;
        bool vanishes = false;
        Value value = ring.from_int(1);
        for (std::size_t a = 0; a < affine.size() && !vanishes; ++a) {
          const int b = beta[affine[a].second];
          const int al = alpha[a];
          if (b < al) {
            vanishes = true;
            break;
          }
          if (al > 0) ring.mul_int(value, binomial(b, al));
          ring.mul(value, powers[affine[a].second][static_cast<std::size_t>(b - al)]);
        }
        if (vanishes) {
          entries.push_back(ring.from_int(0));
          continue;
        }
        for (std::size_t f = 0; f < k; ++f) {
          const std::size_t cv = offset[f] + chart[f];
          ring.mul(value, powers[cv][static_cast<std::size_t>(beta[cv] + order_in_factor[f])]);
        }
        entries.push_back(std::move(value));
      }
    }
  }
  return entries;
}

void require_degree(const FatPointScheme& z, const Multidegree& d) {
  if (d.size() != z.shape().k() || !d.is_nonnegative()) {
    throw std::invalid_argument("multidegree " + d.to_string() + " is not in N^k for this scheme");
  }
}

}  // namespace

ConditionMatrix condition_matrix(const FatPointScheme& z, const Multidegree& d, const Field& field) {
  require_degree(z, d);
  ConditionMatrix cm;
  cm.columns = monomial_basis(z.shape(), d);
  const auto raw = condition_entries(z, d, cm.columns, IntegerRing{}, &cm.rows);
  std::vector<FieldElement> elements;
  elements.reserve(raw.size());
  for (const auto& v : raw) elements.push_back(FieldElement::integer(v, field));
  cm.matrix = DenseMatrix(cm.rows.size(), cm.columns.size(), std::move(elements));
  return cm;
}

HilbertTable::HilbertTable(FatPointScheme z, Field field)
    : scheme_(std::move(z)), field_(field), degree_(multireg::degree(scheme_)) {}

std::uint64_t HilbertTable::compute(const Multidegree& d) const {
  const auto columns = monomial_basis(scheme_.shape(), d);
  const std::size_t cols = columns.size();
  if (field_.is_rational()) {
    auto entries = condition_entries(scheme_, d, columns, IntegerRing{}, nullptr);
    const std::size_t rows = cols == 0 ? 0 : entries.size() / cols;
    return rank_integer(std::move(entries), rows, cols);
  }
  auto entries = condition_entries(scheme_, d, columns, ModRing{field_.modulus()}, nullptr);
  const std::size_t rows = cols == 0 ? 0 : entries.size() / cols;
  return rank_mod_p(std::move(entries), rows, cols, field_.modulus());
}

std::uint64_t HilbertTable::value(const Multidegree& d) const {
  require_degree(scheme_, d);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
  }
  // Concurrent evaluation of the same key is harmless: the value is identical.
  const std::uint64_t h = compute(d);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(d, h).first->second;
}

void HilbertTable::fill_box(const Multidegree& box) const {
  require_degree(scheme_, box);
  std::vector<Multidegree> missing;
  {
    std::shared_lock lock(mutex_);
    for_each_in_box(box, [&](const Multidegree& d) {
      if (!memo_.contains(d)) missing.push_back(d);
    });
  }
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), missing.size());
  if (workers <= 1) {
    for (const auto& d : missing) value(d);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < missing.size(); i = next++) value(missing[i]);
    });
  }
}

std::map<Multidegree, std::uint64_t> HilbertTable::stored() const {
  std::shared_lock lock(mutex_);
  return memo_;
}

std::uint64_t HilbertBox::at(const Multidegree& d) const {
  if (d.size() != upper.size() || !d.is_nonnegative() || !d.leq(upper)) {
    throw std::out_of_range("multidegree " + d.to_string() + " is outside the box");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    index = index * static_cast<std::size_t>(upper[i] + 1) + static_cast<std::size_t>(d[i]);
  }
  return values[index];
}

HilbertBox hilbert_box(const HilbertTable& table, const Multidegree& upper) {
  table.fill_box(upper);
  HilbertBox box{upper, {}};
  for_each_in_box(upper, [&](const Multidegree& d) { box.values.push_back(table.value(d)); });
  return box;
}

std::uint64_t coarse_hilbert(const HilbertTable& table, int t) {
  if (t < 0) throw std::invalid_argument("coarse degree must be >= 0");
  const std::size_t k = table.scheme().shape().k();
  std::uint64_t total = 0;
  for_each_in_box(Multidegree::constant(k, t), [&](const Multidegree& d) {
    if (coarsen(d) == t) total += table.value(d);
  });
  return total;
}

DifferenceTable first_difference(const HilbertTable& table, const Multidegree& box) {
  if (table.scheme().shape().k() != 2) {
    throw UnsupportedError("first differences are implemented for k = 2 only");
  }
  if (box.size() != 2 || !box.is_nonnegative()) {
    throw std::invalid_argument("difference box must lie in N^2");
  }
  table.fill_box(box);
  DifferenceTable diff{box[0] + 1, box[1] + 1, {}};
  auto h = [&](int i, int j) -> std::int64_t {
    if (i < 0 || j < 0) return 0;
    return static_cast<std::int64_t>(table.value(Multidegree{i, j}));
  };
  for (int i = 0; i <= box[0]; ++i) {
    for (int j = 0; j <= box[1]; ++j) {
      diff.values.push_back(h(i, j) - h(i - 1, j) - h(i, j - 1) + h(i - 1, j - 1));
    }
  }
  return diff;
}

std::string to_csv(const HilbertBox& box) {
  std::ostringstream os;
  if (box.upper.size() == 2) {
    for (int j = 0; j <= box.upper[1]; ++j) os << ',' << j;
    os << '\n';
    for (int i = 0; i <= box.upper[0]; ++i) {
      os << i;
      for (int j = 0; j <= box.upper[1]; ++j) os << ',' << box.at(Multidegree{i, j});
      os << '\n';
    }
    return os.str();
  }
  for (std::size_t i = 0; i < box.upper.size(); ++i) os << 'd' << (i + 1) << ',';
  os << "H\n";
  std::size_t index = 0;
  for_each_in_box(box.upper, [&](const Multidegree& d) {
    for (int c : d) os << c << ',';
    os << box.values[index++] << '\n';
  });
  return os.str();
}

}  // namespace multireg
