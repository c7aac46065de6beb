#pragma once

#include "fibo/qpoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fibo {

/// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}.
long long fib(int n);

/// A Fibonacci tiling of a height-n column, tiles of height 1 or 2 read
/// bottom to top; the bottom-most tile always has height 1.
struct Tiling {
  std::vector<int> tiles;

  int height() const;
  bool valid() const;

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.tiles == b.tiles;
  }
  friend bool operator!=(const Tiling& a, const Tiling& b) { return !(a == b); }
};

/// Per-level encoding: entry i is 1 or 2 if a tile of that height ends at
/// level i+1, and 0 for the covered lower half of a height-2 tile.
using LevelSeq = std::vector<int>;

LevelSeq to_levels(const Tiling& t);
Tiling from_levels(const LevelSeq& levels); // throws on invalid sequences

std::string levels_to_string(const LevelSeq& levels); // "(1,0,2,1)"
LevelSeq parse_levels(const std::string& text);       // throws on parse errors

/// All tilings of height n in rank order: the tiling whose top tile has
/// height 1 sorts before the one with a height-2 top, recursively.
const std::vector<Tiling>& enumerate_tilings(int n);

/// (number of height-1 tiles, number of height-2 tiles).
std::pair<int, int> tiling_stats(const Tiling& t);

/// F_n(p,q) = sum over tilings of q^{one(T)} p^{two(T)}.
PQPoly fib_pq(int n);

/// Position of T among the F_n tilings: sum of F_{i-1} over levels i with
/// a height-2 tile ending there.
long long tiling_rank(int n, const Tiling& t); // throws on height mismatch

/// Greedy Zeckendorf representation: strictly decreasing indices c with
/// c >= 2, pairwise non-consecutive, sum of F_c equal to m.
std::vector<int> zeckendorf(long long m);

/// The unique tiling of height n with the given rank.
Tiling unrank(int n, long long m); // throws when m >= fib(n)

/// Sum of q^{rank(T)} over all tilings of height n; equals [F_n]_q.
QPoly rank_gf(int n);

} // namespace fibo
