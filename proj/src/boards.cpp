#include "fibo/boards.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace fibo {

namespace {

// Ranks of the tilings of height h, in enumeration order, computed by the
// level-sum formula.
const std::vector<long long>& tiling_ranks(int h) {
  static std::map<int, std::vector<long long>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  std::vector<long long> ranks;
  for (const Tiling& t : enumerate_tilings(h)) ranks.push_back(tiling_rank(h, t));
  return cache.emplace(h, std::move(ranks)).first->second;
}

class ExponentAccumulator {
public:
  void add(long long exp, long long delta) {
    if (exp >= static_cast<long long>(counts_.size()))
      counts_.resize(static_cast<std::size_t>(exp) + 1, 0);
    counts_[static_cast<std::size_t>(exp)] += delta;
  }
  QPoly to_poly() const {
    std::vector<Int> coeffs(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) coeffs[i] = counts_[i];
    return QPoly(std::move(coeffs));
  }

private:
  std::vector<long long> counts_;
};

} // namespace

bool FerrersBoard::is_ferrers() const {
  if (!heights.empty() && heights.front() < 0) return false;
  return std::is_sorted(heights.begin(), heights.end());
}

long long FerrersBoard::fib_sum(int count) const {
  long long s = 0;
  for (int i = 0; i < count; ++i) s += fib(heights[static_cast<std::size_t>(i)]);
  return s;
}

std::string FerrersBoard::to_string() const {
  std::ostringstream out;
  out << "F(";
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (i) out << ',';
    out << heights[i];
  }
  out << ')';
  return out.str();
}

FerrersBoard staircase(int n) {
  FerrersBoard b;
  for (int i = 0; i < n; ++i) b.heights.push_back(i);
  return b;
}

FerrersBoard parse_board(const std::string& text) {
  auto fail = [&] { throw std::invalid_argument("bad board literal: " + text); };
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') fail();
  std::string body = text.substr(2, text.size() - 3);
  if (text[0] == 'B') {
    std::size_t pos = 0;
    int n = std::stoi(body, &pos);
    if (pos != body.size() || n < 0) fail();
    return staircase(n);
  }
  if (text[0] != 'F') fail();
  FerrersBoard b;
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    int h = std::stoi(tok, &pos);
    if (pos != tok.size() || h < 0) fail();
    b.heights.push_back(h);
  }
  if (b.heights.empty() || !b.is_ferrers()) fail();
  return b;
}

int effective_height(const FerrersBoard& board, int column, int s) {
  return board.heights[static_cast<std::size_t>(column - s)];
}

namespace {

// Enumerates k-subsets of columns with their per-column tiling heights,
// calling leaf(columns) once per subset; heightOf(column, s) gives the
// tiling height of the s-th chosen column.
template <typename HeightOf, typename Leaf>
void for_each_column_subset(int n, int k, HeightOf height_of, Leaf leaf) {
  std::vector<int> cols;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cols.size()) == k) {
      leaf(cols);
      return;
    }
    int need = k - static_cast<int>(cols.size());
    for (int c = next; c + need <= n; ++c) {
      if (fib(height_of(c, static_cast<int>(cols.size()))) == 0) continue;
      cols.push_back(c);
      self(self, c + 1);
      cols.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename HeightOf, typename Visit>
void for_each_placement_impl(const FerrersBoard& board, int k, HeightOf height_of,
                             Visit visit) {
  int n = board.size();
  for_each_column_subset(n, k, height_of, [&](const std::vector<int>& cols) {
    std::vector<PlacedTiling> entries(cols.size());
    auto rec = [&](auto&& self, std::size_t idx) -> void {
      if (idx == cols.size()) {
        visit(entries);
        return;
      }
      int h = height_of(cols[idx], static_cast<int>(idx));
      for (const Tiling& t : enumerate_tilings(h)) {
        entries[idx] = PlacedTiling{cols[idx], t};
        self(self, idx + 1);
      }
    };
    rec(rec, 0);
  });
}

} // namespace

void for_each_file_placement(const FerrersBoard& board, int k,
                             const std::function<void(const FilePlacement&)>& fn) {
  for_each_placement_impl(
      board, k,
      [&](int c, int) { return board.heights[static_cast<std::size_t>(c)]; },
      [&](const std::vector<PlacedTiling>& entries) {
        fn(FilePlacement{entries});
      });
}

void for_each_rook_placement(const FerrersBoard& board, int k,
                             const std::function<void(const RookPlacement&)>& fn) {
  for_each_placement_impl(
      board, k, [&](int c, int s) { return effective_height(board, c, s); },
      [&](const std::vector<PlacedTiling>& entries) {
        fn(RookPlacement{entries});
      });
}

std::vector<FilePlacement> file_placements(const FerrersBoard& board, int k) {
  std::vector<FilePlacement> out;
  for_each_file_placement(board, k, [&](const FilePlacement& p) { out.push_back(p); });
  return out;
}

std::vector<RookPlacement> rook_placements(const FerrersBoard& board, int k) {
  std::vector<RookPlacement> out;
  for_each_rook_placement(board, k, [&](const RookPlacement& p) { out.push_back(p); });
  return out;
}

namespace {

// Direct placement-by-placement summation shared by file_poly and
// rook_poly; heights per chosen column differ, as does the untiled-column
// contribution of the unbarred weight.
template <typename HeightOf, typename UntiledExp>
QPoly sum_placements(const FerrersBoard& board, int k, HeightOf height_of,
                     UntiledExp untiled_exp) {
  int n = board.size();
  if (k < 0 || k > n) return QPoly();
  ExponentAccumulator acc;
  for_each_column_subset(n, k, height_of, [&](const std::vector<int>& cols) {
    long long base = untiled_exp(cols);
    auto rec = [&](auto&& self, std::size_t idx, long long exp) -> void {
      if (idx == cols.size()) {
        acc.add(exp, 1);
        return;
      }
      int h = height_of(cols[idx], static_cast<int>(idx));
      for (long long r : tiling_ranks(h)) self(self, idx + 1, exp + r);
    };
    rec(rec, 0, base);
  });
  return acc.to_poly();
}

} // namespace

QPoly file_poly(const FerrersBoard& board, int k, bool barred) {
  return sum_placements(
      board, k,
      [&](int c, int) { return board.heights[static_cast<std::size_t>(c)]; },
      [&](const std::vector<int>& cols) -> long long {
        if (barred) return 0;
        long long e = 0;
        std::size_t next = 0;
        for (int j = 0; j < board.size(); ++j) {
          if (next < cols.size() && cols[next] == j) {
            ++next;
          } else {
            e += fib(board.heights[static_cast<std::size_t>(j)]);
          }
        }
        return e;
      });
}

QPoly file_poly_rec(const FerrersBoard& board, int k, bool barred) {
  int n = board.size();
  if (k < 0 || k > n) return QPoly();
  // table[m][j] = value for the prefix board b_1..b_m with j tilings
  std::vector<std::vector<QPoly>> table(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    table[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m && j <= k; ++j) {
      QPoly v;
      if (m == 0) {
        v = QPoly(1);
      } else {
        long long fh = fib(board.heights[static_cast<std::size_t>(m - 1)]);
        const auto& prev = table[static_cast<std::size_t>(m - 1)];
        if (j <= m - 1) {
          v = prev[static_cast<std::size_t>(j)];
          if (!barred) v = v.shifted(static_cast<std::size_t>(fh));
        }
        if (j >= 1)
          v += qbracket(fh) * prev[static_cast<std::size_t>(j - 1)];
      }
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = v;
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

QPoly file_poly_z(const std::vector<int>& heights, int k, bool barred) {
  int n = static_cast<int>(heights.size());
  if (k < 0 || k > n) return QPoly();
  // Coefficients of z^0..z^n of the running product.
  std::vector<QPoly> zc(static_cast<std::size_t>(n) + 1);
  zc[0] = QPoly(1);
  int used = 0;
  for (int h : heights) {
    long long fh = fib(h);
    QPoly c0 = barred ? QPoly(1) : QPoly::monomial(1, static_cast<std::size_t>(fh));
    QPoly c1 = qbracket(fh);
    ++used;
    for (int j = used; j >= 1; --j)
      zc[static_cast<std::size_t>(j)] =
          zc[static_cast<std::size_t>(j)] * c0 + zc[static_cast<std::size_t>(j - 1)] * c1;
    zc[0] = zc[0] * c0;
  }
  return zc[static_cast<std::size_t>(k)];
}

QPoly rook_poly(const FerrersBoard& board, int k, bool barred) {
  return sum_placements(
      board, k, [&](int c, int s) { return effective_height(board, c, s); },
      [&](const std::vector<int>&) -> long long {
        return barred ? 0 : board.fib_sum(board.size() - k);
      });
}

QPoly rook_poly_rec(const FerrersBoard& board, int k, bool barred) {
  int n = board.size();
  if (k < 0 || k > n) return QPoly();
  std::vector<std::vector<QPoly>> table(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    table[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m && j <= k; ++j) {
      QPoly v;
      if (j == 0) {
        v = QPoly(1);
      } else {
        const auto& prev = table[static_cast<std::size_t>(m - 1)];
        if (j <= m - 1) v = prev[static_cast<std::size_t>(j)];
        v += qbracket(fib(board.heights[static_cast<std::size_t>(m - j)])) *
             prev[static_cast<std::size_t>(j - 1)];
      }
      table[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = v;
    }
  }
  QPoly r = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  if (!barred) r = r.shifted(static_cast<std::size_t>(board.fib_sum(n - k)));
  return r;
}

bool rel_check(const FerrersBoard& board, int k) {
  QPoly barred = rook_poly(board, k, true);
  QPoly shifted = barred.shifted(static_cast<std::size_t>(board.fib_sum(board.size() - k)));
  return rook_poly(board, k, false) == shifted;
}

QPoly mixed_file_sum(const FerrersBoard& board, int x, bool barred) {
  if (x < 1) throw std::invalid_argument("mixed_file_sum: x must be positive");
  int n = board.size();
  ExponentAccumulator acc;
  auto rec = [&](auto&& self, int i, long long exp) -> void {
    if (i == n) {
      acc.add(exp, 1);
      return;
    }
    int h = board.heights[static_cast<std::size_t>(i)];
    for (long long r : tiling_ranks(h)) self(self, i + 1, exp + r);
    long long rook_base = barred ? 0 : fib(h);
    for (int j = 1; j <= x; ++j) self(self, i + 1, exp + rook_base + j - 1);
  };
  rec(rec, 0, 0);
  return acc.to_poly();
}

QPoly mixed_aug_sum(const FerrersBoard& board, int x) {
  if (x < 1) throw std::invalid_argument("mixed_aug_sum: x must be positive");
  int n = board.size();
  ExponentAccumulator acc;
  // s counts above-bar tilings placed so far; only those cancel, so the
  // effective height at column i is b_{i-s}.
  auto rec = [&](auto&& self, int i, int s, long long exp, int sign) -> void {
    if (i == n) {
      acc.add(exp, sign);
      return;
    }
    int h = effective_height(board, i, s);
    for (long long r : tiling_ranks(h)) self(self, i + 1, s + 1, exp + r, sign);
    for (int j = 1; j <= x; ++j) self(self, i + 1, s, exp + j - 1, sign);
    for (long long r : tiling_ranks(h)) self(self, i + 1, s, exp + r, -sign);
  };
  rec(rec, 0, 0, 0, 1);
  return acc.to_poly();
}

QPoly aug_weight(const FerrersBoard& board, const std::vector<AugChoice>& choices,
                 bool barred) {
  if (static_cast<int>(choices.size()) != board.size())
    throw std::invalid_argument("aug_weight: one choice per column required");
  long long exp = 0;
  int sign = 1;
  int s = 0;
  for (int i = 0; i < board.size(); ++i) {
    const AugChoice& ch = choices[static_cast<std::size_t>(i)];
    int h = effective_height(board, i, s);
    switch (ch.kind) {
      case AugChoice::Kind::AboveTiling:
        exp += tiling_rank(h, ch.tiling);
        ++s;
        break;
      case AugChoice::Kind::BarRook:
        exp += (barred ? 0 : fib(h)) + ch.row - 1;
        break;
      case AugChoice::Kind::FlippedTiling:
        exp += tiling_rank(h, ch.tiling);
        sign = -sign;
        break;
    }
  }
  return QPoly::monomial(sign, static_cast<std::size_t>(exp));
}

bool unbarred_product_applicable(const FerrersBoard& board, int x) {
  return board.size() > 0 && x >= fib(board.heights.back());
}

bool rook_product_check(const FerrersBoard& board, int x) {
  int n = board.size();
  QPoly lhs = pow(qbracket(x), static_cast<unsigned>(n));

  QPoly rhs_barred;
  QPoly factor(1);
  for (int k = 0; k <= n; ++k) {
    rhs_barred += rook_poly(board, n - k, true) * factor;
    if (k < n)
      factor *= qbracket(x) - qbracket(fib(board.heights[static_cast<std::size_t>(k)]));
  }
  if (rhs_barred != lhs) return false;

  if (unbarred_product_applicable(board, x)) {
    QPoly rhs;
    QPoly f(1);
    for (int k = 0; k <= n; ++k) {
      rhs += rook_poly(board, n - k, false) * f;
      if (k < n)
        f *= qbracket(x - fib(board.heights[static_cast<std::size_t>(k)]));
    }
    if (rhs != lhs) return false;
  }
  return true;
}

CancellationResult simulate_cancellation(const FerrersBoard& board,
                                         const std::vector<int>& columns) {
  int n = board.size();
  std::vector<long long> rem(board.heights.begin(), board.heights.end());
  CancellationResult result;
  // s is the 0-based index of the tiling being placed; the s earlier
  // tilings have already canceled cells.
  for (int s = 0; s < static_cast<int>(columns.size()); ++s) {
    int c = columns[static_cast<std::size_t>(s)];
    result.tiled_heights.push_back(static_cast<int>(rem[static_cast<std::size_t>(c)]));
    for (int j = c + 1; j < n; ++j) {
      long long cancel = board.heights[static_cast<std::size_t>(j - s)] -
                         board.heights[static_cast<std::size_t>(j - s - 1)];
      rem[static_cast<std::size_t>(j)] -= cancel;
      if (rem[static_cast<std::size_t>(j)] < 0)
        throw std::logic_error("cancellation exceeded column height");
    }
  }
  std::size_t next = 0;
  for (int j = 0; j < n; ++j) {
    if (next < columns.size() && columns[next] == j) {
      ++next;
    } else {
      result.untiled_heights.push_back(static_cast<int>(rem[static_cast<std::size_t>(j)]));
    }
  }
  return result;
}

namespace {

std::string entries_to_string(const std::vector<PlacedTiling>& entries,
                              const std::function<int(int, int)>& height_of) {
  std::ostringstream out;
  for (std::size_t s = 0; s < entries.size(); ++s) {
    int h = height_of(entries[s].column, static_cast<int>(s));
    out << "col=" << entries[s].column + 1 << " height=" << h
        << " rank=" << tiling_rank(h, entries[s].tiling) << '\n';
  }
  return out.str();
}

} // namespace

std::string placement_to_string(const FilePlacement& p, const FerrersBoard& board) {
  return entries_to_string(p.entries, [&](int c, int) {
    return board.heights[static_cast<std::size_t>(c)];
  });
}

std::string placement_to_string(const RookPlacement& p, const FerrersBoard& board) {
  return entries_to_string(
      p.entries, [&](int c, int s) { return effective_height(board, c, s); });
}

} // namespace fibo
