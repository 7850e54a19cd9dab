#pragma once

// 1-indexed sequence prefix with a display label; at(n) addresses the
// mathematical term index n >= 1.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finecat/ints.hpp"

namespace finecat {

struct Sequence {
  std::string label;
  std::vector<Int> values;  // values[i] holds term i+1

  Sequence() = default;
  Sequence(std::string lab, std::vector<Int> vals)
      : label(std::move(lab)), values(std::move(vals)) {}

  int length() const { return static_cast<int>(values.size()); }

  const Int& at(int n) const {
    check(n);
    return values[static_cast<std::size_t>(n) - 1];
  }
  Int& at(int n) {
    check(n);
    return values[static_cast<std::size_t>(n) - 1];
  }

 private:
  void check(int n) const {
    if (n < 1 || n > length())
      throw std::out_of_range("Sequence::at: index " + std::to_string(n) +
                              " outside 1.." + std::to_string(length()));
  }
};

}  // namespace finecat
