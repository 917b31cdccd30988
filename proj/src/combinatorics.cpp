#include "polarize/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace polarize {

namespace {

// Pascal triangle rows 0..kTableRows-1, built once; concurrent reads only.
constexpr int kTableRows = 65;

const std::vector<std::vector<BigInt>>& pascal_table() {
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> rows(kTableRows);
    for (int n = 0; n < kTableRows; ++n) {
      rows[n].resize(n + 1);
      rows[n][0] = rows[n][n] = 1;
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (n < kTableRows) return pascal_table()[n][k];
  BigInt acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact: any i+1 consecutive integers contain a multiple
  }
  return acc;
}

BigInt multinomial3(int m, int h, int l) {
  if (m < 0) throw std::invalid_argument("multinomial3: m must be nonnegative");
  if (h < 0 || l < 0 || h + l > m) return 0;
  return binomial(m, h) * binomial(m - h, l);
}

}  // namespace polarize
