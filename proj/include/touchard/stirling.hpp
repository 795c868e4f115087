#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "touchard/numeric.hpp"

namespace touchard {

// Triangular table of Stirling numbers of the second kind, exact integers.
// Built with the additive recurrence S(n,k) = k*S(n-1,k) + S(n-1,k-1);
// all intermediates stay nonnegative, so there is no cancellation.
class StirlingTable {
 public:
  explicit StirlingTable(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::invalid_argument("StirlingTable: n_max must be >= 0");
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    rows_[0] = {BigInt(1)};
    for (int n = 1; n <= n_max; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
      row.assign(static_cast<std::size_t>(n) + 1, BigInt(0));
      for (int k = 1; k <= n; ++k) {
        BigInt v = BigInt(k) * (k < n ? prev[static_cast<std::size_t>(k)] : BigInt(0));
        v += prev[static_cast<std::size_t>(k - 1)];
        row[static_cast<std::size_t>(k)] = v;
      }
    }
  }

  int n_max() const { return n_max_; }

  const BigInt& operator()(int n, int k) const {
    static const BigInt kZero(0);
    if (n < 0 || n > n_max_) throw std::out_of_range("StirlingTable: n out of range");
    if (k < 0 || k > n) return kZero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  const std::vector<BigInt>& row(int n) const {
    if (n < 0 || n > n_max_) throw std::out_of_range("StirlingTable: n out of range");
    return rows_[static_cast<std::size_t>(n)];
  }

  // T_n(1), the nth Bell number.
  BigInt bell(int n) const {
    BigInt acc(0);
    for (const auto& s : row(n)) acc += s;
    return acc;
  }

 private:
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

inline StirlingTable build_stirling_table(int n_max) { return StirlingTable(n_max); }

// Pascal triangle, exact integers.
class BinomialTable {
 public:
  explicit BinomialTable(int n_max) {
    rows_.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.assign(static_cast<std::size_t>(n) + 1, BigInt(1));
      for (int k = 1; k < n; ++k)
        row[static_cast<std::size_t>(k)] =
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
            rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    }
  }
  const BigInt& operator()(int n, int k) const {
    static const BigInt kZero(0);
    if (k < 0 || k > n) return kZero;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
};

inline BigInt factorial_big(int n) {
  BigInt acc(1);
  for (int i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace touchard
