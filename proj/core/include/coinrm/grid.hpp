#pragma once

// Rectangular grids: removing a heads-up coin flips its orthogonal
// neighbours that still hold coins.  Grids never compact; gaps stay.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coinrm/config.hpp"
#include "coinrm/solver.hpp"

namespace coinrm {

inline constexpr int kGridCellLimit = 12;

struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<Cell> cells;  // row-major

  Cell at(int row, int col) const {  // 1-based
    return cells[static_cast<std::size_t>(row - 1) * cols + (col - 1)];
  }
  bool operator==(const Grid&) const = default;
};

// Rows of 0/1 joined by '/'; '.' accepted so trace states round-trip.
Grid parse_grid(std::string_view text);
std::string format(const Grid&);

Grid apply_move_grid(const Grid&, int row, int col);

// Row-major 1-based positions, used for traces and generic search.
std::vector<int> legal_moves(const Grid&);
Grid apply_move(const Grid&, int pos);

int heads_count(const Grid&);
int coin_count(const Grid&);
bool is_cleared(const Grid&);
Variant variant_of(const Grid&);

// Exhaustive memoized search; rows*cols <= 12.
SearchResult grid_removable_bruteforce(const Grid&);
SearchResult grid_removable_bruteforce(const Grid&, SearchMemo&);

// Siler's characterization.  Grids with an odd number of columns are
// removable iff the heads count is odd.  2 x n grids with n even are
// removable iff the heads count is even and nonzero and the grid is not in
// the excluded family: first and last columns all tails and each row's
// interior made of aligned two-cell blocks 00 or 11.  Other shapes (and
// grids with empty positions) are out of the theorem's reach.
bool siler_predicate(const Grid&);

// Tag-dispatched parsing for callers that pick the variant at runtime.
using AnyConfig =
    std::variant<LinearConfig, GappedLinearConfig, CircularConfig, GappedCircularConfig, Grid>;

AnyConfig parse_any(std::string_view text, Variant variant);
std::string format(const AnyConfig&);

}  // namespace coinrm
