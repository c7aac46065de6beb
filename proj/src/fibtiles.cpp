#include "fibo/fibtiles.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fibo {

long long fib(int n) {
  if (n < 0) throw std::invalid_argument("fib: negative index");
  long long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    long long next = a + b;
    a = b;
    b = next;
  }
  return a;
}

int Tiling::height() const {
  return std::accumulate(tiles.begin(), tiles.end(), 0);
}

bool Tiling::valid() const {
  if (tiles.empty()) return false;
  if (tiles.front() != 1) return false;
  return std::all_of(tiles.begin(), tiles.end(),
                     [](int t) { return t == 1 || t == 2; });
}

LevelSeq to_levels(const Tiling& t) {
  LevelSeq levels;
  for (int tile : t.tiles) {
    if (tile == 2) levels.push_back(0);
    levels.push_back(tile);
  }
  return levels;
}

Tiling from_levels(const LevelSeq& levels) {
  Tiling t;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    switch (levels[i]) {
      case 1:
        t.tiles.push_back(1);
        break;
      case 0:
        if (i + 1 >= levels.size() || levels[i + 1] != 2)
          throw std::invalid_argument("level sequence: 0 not followed by 2");
        break;
      case 2:
        if (i == 0 || levels[i - 1] != 0)
          throw std::invalid_argument("level sequence: 2 not preceded by 0");
        t.tiles.push_back(2);
        break;
      default:
        throw std::invalid_argument("level sequence: entries must be 0, 1 or 2");
    }
  }
  if (!levels.empty() && !t.valid())
    throw std::invalid_argument("level sequence: bottom tile must have height 1");
  return t;
}

std::string levels_to_string(const LevelSeq& levels) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out << ',';
    out << levels[i];
  }
  out << ')';
  return out.str();
}

LevelSeq parse_levels(const std::string& text) {
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("level sequence: expected \"(t1,t2,...)\"");
  std::string s = text.substr(1, text.size() - 2);
  LevelSeq levels;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok != "0" && tok != "1" && tok != "2")
      throw std::invalid_argument("level sequence: bad token '" + tok + "'");
    levels.push_back(tok[0] - '0');
  }
  if (levels.empty()) throw std::invalid_argument("level sequence: empty");
  return levels;
}

const std::vector<Tiling>& enumerate_tilings(int n) {
  // Deque so growth never invalidates references handed out earlier.
  static std::deque<std::vector<Tiling>> cache = {
      {}, {Tiling{{1}}}, {Tiling{{1, 1}}}};
  static std::mutex mutex;
  if (n < 0) throw std::invalid_argument("enumerate_tilings: negative height");
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    std::vector<Tiling> out;
    // Rank order: top tile of height 1 first, then height 2.
    for (const Tiling& t : cache[m - 1]) {
      Tiling e = t;
      e.tiles.push_back(1);
      out.push_back(std::move(e));
    }
    for (const Tiling& t : cache[m - 2]) {
      Tiling e = t;
      e.tiles.push_back(2);
      out.push_back(std::move(e));
    }
    cache.push_back(std::move(out));
  }
  return cache[static_cast<std::size_t>(n)];
}

std::pair<int, int> tiling_stats(const Tiling& t) {
  int ones = 0, twos = 0;
  for (int tile : t.tiles) (tile == 1 ? ones : twos)++;
  return {ones, twos};
}

PQPoly fib_pq(int n) {
  PQPoly p;
  for (const Tiling& t : enumerate_tilings(n)) {
    auto [ones, twos] = tiling_stats(t);
    p.add_term(ones, twos, 1);
  }
  return p;
}

long long tiling_rank(int n, const Tiling& t) {
  if (t.height() != n)
    throw std::invalid_argument("tiling_rank: tiling height does not match n");
  long long r = 0;
  int level = 0;
  for (int tile : t.tiles) {
    level += tile;
    if (tile == 2) r += fib(level - 1);
  }
  return r;
}

std::vector<int> zeckendorf(long long m) {
  if (m < 0) throw std::invalid_argument("zeckendorf: negative argument");
  std::vector<int> indices;
  while (m > 0) {
    int k = 2;
    while (fib(k + 1) <= m) ++k;
    indices.push_back(k);
    m -= fib(k);
  }
  return indices;
}

Tiling unrank(int n, long long m) {
  if (m < 0 || m >= fib(n))
    throw std::out_of_range("unrank: rank out of range for height");
  // A height-2 tile ends at level c+1 for each Zeckendorf index c of m.
  std::vector<bool> two_ends(static_cast<std::size_t>(n) + 1, false);
  for (int c : zeckendorf(m)) two_ends[static_cast<std::size_t>(c) + 1] = true;
  Tiling t;
  for (int level = 1; level <= n;) {
    if (level + 1 <= n && two_ends[static_cast<std::size_t>(level) + 1]) {
      t.tiles.push_back(2);
      level += 2;
    } else {
      t.tiles.push_back(1);
      level += 1;
    }
  }
  return t;
}

QPoly rank_gf(int n) {
  std::vector<Int> coeffs(static_cast<std::size_t>(fib(n)), Int(0));
  for (const Tiling& t : enumerate_tilings(n))
    coeffs[static_cast<std::size_t>(tiling_rank(n, t))] += 1;
  return QPoly(std::move(coeffs));
}

} // namespace fibo
