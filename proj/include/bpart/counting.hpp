#pragma once

// Exact counts for zero-block-free type B partitions.
//
//   |V_n|  = sum_j 2^(n-j) S(n,j)
//   s_n^B  = sum_k (-1)^(n-k) C(n,k) |V_k|        (singleton-free count)
//   sum_n s_n^B x^n / n! = exp(sinh(x) e^x - x)
//
// All arithmetic is exact (GMP).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "bpart/core.hpp"
#include "bpart/enumerate.hpp"

namespace bpart {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Triangular memo of Stirling numbers of the second kind. Grows on demand;
/// safe to share between threads.
class StirlingTable {
 public:
  BigInt operator()(std::size_t k, std::size_t j) {
    if (j > k) return 0;
    std::lock_guard lock(mutex_);
    extend(k);
    return rows_[k][j];
  }

 private:
  void extend(std::size_t k) {
    if (rows_.empty()) rows_.push_back({BigInt(1)});
    while (rows_.size() <= k) {
      const std::size_t m = rows_.size();
      const auto &prev = rows_[m - 1];
      std::vector<BigInt> row(m + 1, 0);
      for (std::size_t j = 1; j <= m; ++j) {
        BigInt value = prev[j - 1];
        if (j < m) value += BigInt(static_cast<unsigned long>(j)) * prev[j];
        row[j] = value;
      }
      rows_.push_back(std::move(row));
    }
  }

  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable &stirling_table() {
  static StirlingTable table;
  return table;
}

inline BigInt stirling2(std::size_t k, std::size_t j) { return stirling_table()(k, j); }

inline BigInt binomial(std::size_t n, std::size_t k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

inline BigInt pow2(std::size_t e) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, e);
  return result;
}

inline BigInt factorial(std::size_t n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

/// |V_n|.
inline BigInt total_count(std::size_t n) {
  BigInt sum = 0;
  for (std::size_t j = 0; j <= n; ++j) sum += pow2(n - j) * stirling2(n, j);
  return sum;
}

/// Number of partitions in V_n without singleton pairs, by inclusion-exclusion.
inline BigInt singleton_free_ie(std::size_t n) {
  BigInt sum = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt term = binomial(n, k) * total_count(k);
    if ((n - k) % 2 == 0) sum += term; else sum -= term;
  }
  return sum;
}

/// Power series truncated after x^order, with exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(std::size_t order) : coeffs_(order + 1, BigRational(0)) {}

  /// sum_{n <= order} (a x)^n / n!
  static RationalSeries exponential(std::size_t order, long a = 1) {
    RationalSeries s(order);
    BigInt power = 1;
    for (std::size_t n = 0; n <= order; ++n) {
      s.coeffs_[n] = BigRational(power, factorial(n));
      s.coeffs_[n].canonicalize();
      power *= a;
    }
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const BigRational &operator[](std::size_t n) const { return coeffs_[n]; }
  BigRational &operator[](std::size_t n) { return coeffs_[n]; }

  RationalSeries &operator+=(const RationalSeries &other) {
    check_order(other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += other.coeffs_[n];
    return *this;
  }

  RationalSeries &operator-=(const RationalSeries &other) {
    check_order(other);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= other.coeffs_[n];
    return *this;
  }

  RationalSeries &operator*=(const BigRational &scalar) {
    for (auto &c : coeffs_) c *= scalar;
    return *this;
  }

  friend RationalSeries operator+(RationalSeries a, const RationalSeries &b) { return a += b; }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries &b) { return a -= b; }
  friend RationalSeries operator*(RationalSeries a, const BigRational &s) { return a *= s; }

  friend RationalSeries operator*(const RationalSeries &a, const RationalSeries &b) {
    a.check_order(b);
    RationalSeries c(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= a.order(); ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return c;
  }

  /// exp(f) for f with zero constant term, from n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
  RationalSeries exp() const {
    if (coeffs_[0] != 0) throw std::domain_error("exp of a series needs a zero constant term");
    RationalSeries g(order());
    g.coeffs_[0] = 1;
    for (std::size_t n = 1; n <= order(); ++n) {
      BigRational acc = 0;
      for (std::size_t k = 1; k <= n; ++k)
        if (coeffs_[k] != 0) acc += BigRational(static_cast<unsigned long>(k)) * coeffs_[k] * g.coeffs_[n - k];
      g.coeffs_[n] = acc / BigRational(static_cast<unsigned long>(n));
    }
    return g;
  }

  friend bool operator==(const RationalSeries &a, const RationalSeries &b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_order(const RationalSeries &other) const {
    if (other.order() != order()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<BigRational> coeffs_;
};

/// sinh(x) e^x - x = (e^{2x} - 1)/2 - x, truncated after x^order.
inline RationalSeries singleton_free_exponent(std::size_t order) {
  RationalSeries f = RationalSeries::exponential(order, 2);
  f[0] -= 1;
  f *= BigRational(1, 2);
  if (order >= 1) f[1] -= 1;
  return f;
}

/// s_0^B, ..., s_N^B read off exp(sinh(x) e^x - x).
inline std::vector<BigInt> singleton_free_egf(std::size_t order) {
  const RationalSeries g = singleton_free_exponent(order).exp();
  std::vector<BigInt> counts;
  counts.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigRational scaled = g[n] * BigRational(factorial(n));
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw InvariantViolation("n! [x^n] exp(sinh(x)e^x - x) is not an integer at n = " + std::to_string(n));
    counts.push_back(scaled.get_num());
  }
  return counts;
}

/// Joint distribution of (singleton pairs, adjacency pairs) over V_n.
class BivariateDistribution {
 public:
  BivariateDistribution() = default;
  explicit BivariateDistribution(std::size_t n) : n_(n), table_((n + 1) * (n + 1), 0) {}

  std::size_t n() const noexcept { return n_; }
  const BigInt &at(std::size_t s, std::size_t a) const { return table_[s * (n_ + 1) + a]; }
  BigInt &at(std::size_t s, std::size_t a) { return table_[s * (n_ + 1) + a]; }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto &c : table_) sum += c;
    return sum;
  }

  /// P_n(x, y) at integer points.
  BigInt evaluate(long x, long y) const {
    BigInt sum = 0;
    for (std::size_t s = 0; s <= n_; ++s) {
      for (std::size_t a = 0; a <= n_; ++a) {
        if (at(s, a) == 0) continue;
        BigInt xs, ya;
        mpz_pow_ui(xs.get_mpz_t(), BigInt(x).get_mpz_t(), s);
        mpz_pow_ui(ya.get_mpz_t(), BigInt(y).get_mpz_t(), a);
        sum += at(s, a) * xs * ya;
      }
    }
    return sum;
  }

  bool is_symmetric() const {
    for (std::size_t s = 0; s <= n_; ++s)
      for (std::size_t a = s + 1; a <= n_; ++a)
        if (at(s, a) != at(a, s)) return false;
    return true;
  }

  BivariateDistribution &operator+=(const BivariateDistribution &other) {
    if (other.n_ != n_) throw std::invalid_argument("distribution sizes differ");
    for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += other.table_[i];
    return *this;
  }

  friend bool operator==(const BivariateDistribution &, const BivariateDistribution &) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> table_{BigInt(0)};
};

struct DistributionOptions {
  int guard = 12;
  unsigned jobs = 1;
};

/// Tabulates P_n(x, y) by enumerating V_n.
inline BivariateDistribution distribution(int n, DistributionOptions options = {}) {
  if (n < 1) throw std::invalid_argument("distribution needs n >= 1");
  if (n > options.guard)
    throw Error(ErrorKind::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                         std::to_string(options.guard));
  const auto width = static_cast<std::size_t>(n) + 1;
  auto partials = map_slices(n, options.jobs, [width](const EnumerationState &root) {
    std::vector<std::uint64_t> counts(width * width, 0);
    complete(root, [&](const SignedPartition &p) {
      const auto stats = statistics(p);
      ++counts[stats.singletons * width + stats.adjacencies];
    });
    return counts;
  });
  BivariateDistribution dist(static_cast<std::size_t>(n));
  for (const auto &counts : partials)
    for (std::size_t s = 0; s < width; ++s)
      for (std::size_t a = 0; a < width; ++a)
        if (counts[s * width + a] != 0)
          dist.at(s, a) += BigInt(static_cast<unsigned long>(counts[s * width + a]));
  return dist;
}

}  // namespace bpart
