#pragma once

#include "fibo/fibtiles.hpp"
#include "fibo/qpoly.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace fibo {

/// Ferrers board with weakly increasing column heights b_1 <= ... <= b_n.
struct FerrersBoard {
  std::vector<int> heights;

  int size() const { return static_cast<int>(heights.size()); }
  bool is_ferrers() const;
  long long fib_sum(int count) const; // sum of F_{b_i} over the first `count` columns

  std::string to_string() const; // "F(b1,b2,...)"
};

/// The staircase board B_n = F(0,1,...,n-1).
FerrersBoard staircase(int n);

/// Accepts "F(b1,...,bn)" and the staircase shorthand "B(n)".
FerrersBoard parse_board(const std::string& text); // throws on parse errors

/// One tiled column of a placement: 0-based column index plus its tiling.
struct PlacedTiling {
  int column = 0;
  Tiling tiling;
};

struct FilePlacement {
  std::vector<PlacedTiling> entries;
};

struct RookPlacement {
  std::vector<PlacedTiling> entries;
};

/// Effective height of the s-th tiled column (0-based s) in the rook
/// cancellation scheme: b_{i_s - s} with 0-based column index i_s.
int effective_height(const FerrersBoard& board, int column, int s);

void for_each_file_placement(const FerrersBoard& board, int k,
                             const std::function<void(const FilePlacement&)>& fn);
void for_each_rook_placement(const FerrersBoard& board, int k,
                             const std::function<void(const RookPlacement&)>& fn);

std::vector<FilePlacement> file_placements(const FerrersBoard& board, int k);
std::vector<RookPlacement> rook_placements(const FerrersBoard& board, int k);

/// FT_k(B,q) / ovFT_k(B,q) by direct summation over placements.
QPoly file_poly(const FerrersBoard& board, int k, bool barred);
/// Same value via the column-peeling recursion.
QPoly file_poly_rec(const FerrersBoard& board, int k, bool barred);
/// Coefficient of z^k in the column-factor product; accepts arbitrary
/// skyline height vectors, not just Ferrers boards.
QPoly file_poly_z(const std::vector<int>& heights, int k, bool barred);

/// RT_k(B,q) / ovRT_k(B,q) by direct summation over placements.
QPoly rook_poly(const FerrersBoard& board, int k, bool barred);
/// Barred column-peeling recursion; unbarred via the q-shift relation.
QPoly rook_poly_rec(const FerrersBoard& board, int k, bool barred);

/// RT_k(B,q) = q^{sum of F_{b_i}, i <= n-k} * ovRT_k(B,q).
bool rel_check(const FerrersBoard& board, int k);

/// Weighted sum over all mixed file placements on B_x, by enumeration.
/// Equals prod [x+F_{b_i}]_q (unbarred) or prod ([x]_q+[F_{b_i}]_q) (barred).
QPoly mixed_file_sum(const FerrersBoard& board, int x, bool barred);

/// Signed barred weight sum over augmented mixed placements; equals [x]_q^n.
QPoly mixed_aug_sum(const FerrersBoard& board, int x);

/// One column of an augmented mixed placement.
struct AugChoice {
  enum class Kind { AboveTiling, BarRook, FlippedTiling };
  Kind kind = Kind::BarRook;
  Tiling tiling; // for the two tiling kinds
  int row = 1;   // for BarRook, 1-based from the top
};

/// Signed weight of a single augmented mixed placement (one choice per
/// column, left to right). Throws if a tiling height does not match the
/// column's effective height.
QPoly aug_weight(const FerrersBoard& board, const std::vector<AugChoice>& choices,
                 bool barred);

/// True when x >= F_{b_n}, the hypothesis for the unbarred rook product.
bool unbarred_product_applicable(const FerrersBoard& board, int x);

/// Checks [x]_q^n against both rook product expansions (the unbarred form
/// only when x >= F_{b_n}).
bool rook_product_check(const FerrersBoard& board, int x);

/// Cell-level simulation of the cancellation scheme for a set of tiled
/// columns (0-based, increasing): each tiling cancels top cells of columns
/// to its right so untiled columns keep heights b_1,...,b_{n-k}.
struct CancellationResult {
  std::vector<int> tiled_heights;   // uncanceled cells in tiled columns, left to right
  std::vector<int> untiled_heights; // uncanceled cells in untiled columns, left to right
};
CancellationResult simulate_cancellation(const FerrersBoard& board,
                                         const std::vector<int>& columns);

std::string placement_to_string(const FilePlacement& p, const FerrersBoard& board);
std::string placement_to_string(const RookPlacement& p, const FerrersBoard& board);

} // namespace fibo
