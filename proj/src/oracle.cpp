#include "finecat/oracle.hpp"

#include <stdexcept>

namespace finecat::oracle {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void bound(bool ok, const char* what) {
  if (!ok) throw resource_limit_error(what);
}

}  // namespace

bool DyckPath::well_formed() const {
  int h = 0;
  for (char c : steps) {
    if (c == 'U') {
      ++h;
    } else if (c == 'D') {
      --h;
    } else {
      return false;
    }
    if (h < 0) return false;
  }
  return h == 0;
}

void for_each_dyck(int s, const std::function<void(const DyckPath&)>& visit) {
  require(s >= 0, "for_each_dyck: negative semilength");
  bound(s <= kMaxDyckSemilength, "for_each_dyck: semilength above hard cap");
  DyckPath p;
  p.steps.reserve(2 * s);
  // U before D at every branch point gives lexicographic order with U < D.
  auto gen = [&](auto&& self, int open, int close) -> void {
    if (open == s && close == s) {
      visit(p);
      return;
    }
    if (open < s) {
      p.steps.push_back('U');
      self(self, open + 1, close);
      p.steps.pop_back();
    }
    if (close < open) {
      p.steps.push_back('D');
      self(self, open, close + 1);
      p.steps.pop_back();
    }
  };
  gen(gen, 0, 0);
}

std::vector<DyckPath> enumerate_dyck(int s) {
  std::vector<DyckPath> out;
  for_each_dyck(s, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

int hill_count(const DyckPath& p) {
  return static_cast<int>(hill_positions(p).size());
}

std::vector<int> hill_positions(const DyckPath& p) {
  std::vector<int> out;
  int h = 0;
  const std::string& s = p.steps;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'U') {
      if (h == 0 && i + 1 < s.size() && s[i + 1] == 'D') {
        out.push_back(static_cast<int>(i));
      }
      ++h;
    } else {
      --h;
    }
  }
  return out;
}

std::vector<Int> hill_histogram(int s) {
  require(s >= 0, "hill_histogram: negative semilength");
  bound(s <= kMaxDyckSemilength, "hill_histogram: semilength above hard cap");
  std::vector<Int> hist(s + 1, Int(0));
  for_each_dyck(s, [&](const DyckPath& p) { hist[hill_count(p)] += 1; });
  return hist;
}

Int colored_count_from_histogram(const std::vector<Int>& hist, int k, int m) {
  require(k >= 1, "colored_count_from_histogram: k must be positive");
  require(m >= 1, "colored_count_from_histogram: m must be positive");
  Int total = 0;
  for (int h = k - 1; h < static_cast<int>(hist.size()); ++h) {
    if (hist[h] == 0) continue;
    // choose which k-1 hills get color m, the rest any of the other m-1
    total += hist[h] * binomial(h, k - 1) * pow_int(m - 1, h - k + 1);
  }
  return total;
}

Int count_colored(int n, int k, int m) {
  require(n >= 1, "count_colored: n must be positive");
  require(k >= 1, "count_colored: k must be positive");
  require(m >= 1, "count_colored: m must be positive");
  return colored_count_from_histogram(hill_histogram(n - 1), k, m);
}

Int count_total(int n, int m) {
  require(n >= 1, "count_total: n must be positive");
  require(m >= 1, "count_total: m must be positive");
  std::vector<Int> hist = hill_histogram(n - 1);
  Int total = 0;
  for (int h = 0; h < static_cast<int>(hist.size()); ++h) {
    if (hist[h] == 0) continue;
    total += hist[h] * pow_int(m, h);
  }
  return total;
}

void for_each_ballot(int ones, int zeros,
                     const std::function<void(const BallotWord&)>& visit) {
  require(ones >= 0 && zeros >= 0, "for_each_ballot: negative letter count");
  bound(ones + zeros <= kMaxBallotLength,
        "for_each_ballot: word length above hard cap");
  BallotWord w;
  w.bits.reserve(ones + zeros);
  // '0' before '1' at every branch point gives lexicographic order. A '0' may
  // be placed only while zeros used stay strictly below ones used.
  auto gen = [&](auto&& self, int used1, int used0) -> void {
    if (used1 == ones && used0 == zeros) {
      visit(w);
      return;
    }
    if (used0 < zeros && used0 < used1) {
      w.bits.push_back('0');
      self(self, used1, used0 + 1);
      w.bits.pop_back();
    }
    if (used1 < ones) {
      w.bits.push_back('1');
      self(self, used1 + 1, used0);
      w.bits.pop_back();
    }
  };
  gen(gen, 0, 0);
}

Int count_ballot(int n, int k) {
  require(n >= 1 && k >= 1, "count_ballot: n and k must be positive");
  Int total = 0;
  for_each_ballot(n - 1, k - 1, [&](const BallotWord&) { total += 1; });
  return total;
}

BallotWord dyck_to_ballot(const ColoredDyckPath& p) {
  require(p.path.well_formed(), "dyck_to_ballot: malformed path");
  std::vector<int> hills = hill_positions(p.path);
  require(p.colors.size() == hills.size(),
          "dyck_to_ballot: one color per hill required");
  for (int c : p.colors) {
    require(c == 1 || c == 2, "dyck_to_ballot: colors must be 1 or 2");
  }
  BallotWord w;
  const std::string& s = p.path.steps;
  size_t hi = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (hi < hills.size() && static_cast<int>(i) == hills[hi]) {
      if (p.colors[hi] == 2) {
        w.bits.push_back('1');
        ++i;  // the hill's D is consumed with it
      } else {
        w.bits.push_back('1');
        w.bits.push_back('0');
        ++i;
      }
      ++hi;
    } else {
      w.bits.push_back(s[i] == 'U' ? '1' : '0');
    }
  }
  return w;
}

ColoredDyckPath ballot_to_dyck(const BallotWord& w) {
  int diff = 0;
  for (char c : w.bits) {
    require(c == '0' || c == '1', "ballot_to_dyck: letters must be 0 or 1");
    diff += (c == '1') ? 1 : -1;
    require(diff >= 0, "ballot_to_dyck: prefix with more 0 than 1");
  }
  size_t len = w.bits.size();
  // A 1 is a separator when no unmatched 0 lies to its right; z counts the
  // 0s still unmatched during the right-to-left sweep.
  std::vector<bool> sep(len, false);
  int z = 0;
  for (size_t i = len; i-- > 0;) {
    if (w.bits[i] == '0') {
      ++z;
    } else if (z == 0) {
      sep[i] = true;
    } else {
      --z;
    }
  }
  ColoredDyckPath out;
  std::vector<bool> sep_up;
  for (size_t i = 0; i < len; ++i) {
    if (sep[i]) {
      out.path.steps += "UD";
      sep_up.push_back(true);
      sep_up.push_back(false);
    } else {
      out.path.steps.push_back(w.bits[i] == '1' ? 'U' : 'D');
      sep_up.push_back(false);
    }
  }
  require(out.path.well_formed(), "ballot_to_dyck: transcription not a path");
  for (int pos : hill_positions(out.path)) {
    out.colors.push_back(sep_up[pos] ? 2 : 1);
  }
  return out;
}

bool validate_ternary_g4(const TernaryWord& w) {
  // Each maximal {0,1} block must carry exactly one more 1 than 0, checked
  // when a 2 closes it and once more at the end. A leading 2, a trailing 2,
  // and adjacent 2s all fail because an empty block has difference 0.
  int diff = 0;
  for (char c : w.letters) {
    if (c == '0') {
      --diff;
    } else if (c == '1') {
      ++diff;
    } else if (c == '2') {
      if (diff != 1) return false;
      diff = 0;
    } else {
      return false;
    }
  }
  return diff == 1;
}

namespace {

// Generates all valid words of the given length, tallying by the number of
// 2s. Placing a 2 is only legal when the block so far has difference 1, so
// invalid words are pruned as early as possible.
void ternary_tally(std::string& buf, int len, int diff, int twos,
                   std::vector<Int>& counts) {
  int pos = static_cast<int>(buf.size());
  if (pos == len) {
    if (diff == 1) counts[twos] += 1;
    return;
  }
  // the final difference of 1 cannot be reached from too far away: each
  // letter moves it by at most one, and a 2 only ever resets 1 to 0
  if (diff - 1 > len - pos || 1 - diff > len - pos) return;
  buf.push_back('0');
  ternary_tally(buf, len, diff - 1, twos, counts);
  buf.back() = '1';
  ternary_tally(buf, len, diff + 1, twos, counts);
  if (diff == 1) {
    buf.back() = '2';
    ternary_tally(buf, len, 0, twos + 1, counts);
  }
  buf.pop_back();
}

}  // namespace

std::vector<Int> ternary_histogram(int n) {
  require(n >= 1, "ternary_histogram: n must be positive");
  int len = 2 * n - 1;
  bound(len <= kMaxTernaryLength,
        "ternary_histogram: word length above hard cap");
  std::vector<Int> counts(n, Int(0));  // at most n-1 twos fit
  std::string buf;
  buf.reserve(len);
  ternary_tally(buf, len, 0, 0, counts);
  return counts;
}

Int count_ternary_g4(int n, int k) {
  require(k >= 1, "count_ternary_g4: k must be positive");
  std::vector<Int> counts = ternary_histogram(n);
  if (k - 1 >= static_cast<int>(counts.size())) return 0;
  return counts[k - 1];
}

}  // namespace finecat::oracle
