#pragma once

// Lower-triangular array with 1-indexed rows; row n has entries k = 1..n.

#include <stdexcept>
#include <string>
#include <vector>

#include "finecat/ints.hpp"

namespace finecat {

struct Triangle {
  std::vector<std::vector<Int>> rows;

  Triangle() = default;
  explicit Triangle(int order) : rows(static_cast<std::size_t>(order)) {
    for (int n = 1; n <= order; ++n)
      rows[n - 1].assign(static_cast<std::size_t>(n), Int(0));
  }

  int order() const { return static_cast<int>(rows.size()); }

  const Int& at(int n, int k) const {
    check(n, k);
    return rows[n - 1][k - 1];
  }
  Int& at(int n, int k) {
    check(n, k);
    return rows[n - 1][k - 1];
  }

  Int row_sum(int n) const {
    check(n, 1);
    Int s = 0;
    for (const Int& v : rows[n - 1]) s += v;
    return s;
  }

  bool operator==(const Triangle&) const = default;

 private:
  void check(int n, int k) const {
    if (n < 1 || n > order() || k < 1 || k > n)
      throw std::out_of_range("Triangle::at(" + std::to_string(n) + "," +
                              std::to_string(k) + "): outside triangle of order " +
                              std::to_string(order()));
  }
};

}  // namespace finecat
