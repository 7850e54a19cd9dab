#pragma once

// Brute-force ground truth. Everything here counts finite combinatorial
// objects by generating them outright; nothing routes through the formula
// layers these counts are checked against. Enumerations carry hard size
// bounds and raise resource_limit_error beyond them.

#include <functional>
#include <string>
#include <vector>

#include "finecat/ints.hpp"

namespace finecat::oracle {

inline constexpr int kMaxDyckSemilength = 14;
inline constexpr int kMaxBallotLength = 24;
inline constexpr int kMaxTernaryLength = 15;

// Word over {'U','D'}: every prefix has at least as many U as D, totals equal.
// A hill is a U at ground level immediately followed by D.
struct DyckPath {
  std::string steps;

  int semilength() const { return static_cast<int>(steps.size()) / 2; }
  bool well_formed() const;
  bool operator==(const DyckPath&) const = default;
};

// A Dyck path plus one color per hill, in left-to-right hill order.
struct ColoredDyckPath {
  DyckPath path;
  std::vector<int> colors;

  bool operator==(const ColoredDyckPath&) const = default;
};

// Word over {'0','1'} in which every prefix has #0 <= #1.
struct BallotWord {
  std::string bits;

  bool operator==(const BallotWord&) const = default;
};

struct TernaryWord {
  std::string letters;  // over {'0','1','2'}

  bool operator==(const TernaryWord&) const = default;
};

// Visits every Dyck path of semilength s in lexicographic order with U < D.
void for_each_dyck(int s, const std::function<void(const DyckPath&)>& visit);

std::vector<DyckPath> enumerate_dyck(int s);

int hill_count(const DyckPath& p);
std::vector<int> hill_positions(const DyckPath& p);  // index of each hill's U

// histogram[h] = number of Dyck paths of semilength s with exactly h hills.
std::vector<Int> hill_histogram(int s);

// sum_h hist[h] * C(h, k-1) * (m-1)^(h-k+1): paths weighted by the number of
// ways to color their hills with m colors so that exactly k-1 hills receive
// color m. (m-1)^0 = 1 even for m = 1, so m = 1 selects paths with k-1 hills.
Int colored_count_from_histogram(const std::vector<Int>& hist, int k, int m);

// Dyck paths of semilength n-1 with hills colored in m colors, exactly k-1 of
// them in color m.
Int count_colored(int n, int k, int m);

// Same without the color-m restriction: sum over paths of m^hills.
Int count_total(int n, int m);

// Visits every word with the given numbers of ones and zeros in which every
// prefix has #0 <= #1, in lexicographic order with '0' < '1'.
void for_each_ballot(int ones, int zeros,
                     const std::function<void(const BallotWord&)>& visit);

// Ballot words of length n+k-2 with n-1 ones and k-1 zeros.
Int count_ballot(int n, int k);

// Two-colored paths to ballot words: each color-2 hill becomes the single
// letter 1; every other step transcribes U -> 1, D -> 0.
BallotWord dyck_to_ballot(const ColoredDyckPath& p);

// Inverse: a 1 with no unmatched 0 to its right is a color-2 hill; matched
// stretches transcribe back, their ground-level hills colored 1.
ColoredDyckPath ballot_to_dyck(const BallotWord& w);

// Valid iff every maximal {0,1}-block has exactly one more 1 than 0; this
// forces no '2' at either end and no two adjacent '2'.
bool validate_ternary_g4(const TernaryWord& w);

// Valid ternary words of length 2n-1 with exactly k-1 twos, by a full scan
// of all 3^(2n-1) words.
Int count_ternary_g4(int n, int k);

// counts[j] = number of valid ternary words of length 2n-1 with j twos.
std::vector<Int> ternary_histogram(int n);

}  // namespace finecat::oracle
