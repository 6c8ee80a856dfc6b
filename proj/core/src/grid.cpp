#include "coinrm/grid.hpp"

#include <algorithm>

#include "coinrm/detail/search.hpp"

namespace coinrm {

Grid parse_grid(std::string_view text) {
  if (text.empty()) throw EmptyInputWhereForbidden("grid text must not be empty");
  Grid grid;
  std::size_t row_start = 0;
  auto push_row = [&](std::string_view row) {
    if (row.empty()) throw EmptyInputWhereForbidden("grid rows must not be empty");
    if (grid.rows == 0) {
      grid.cols = static_cast<int>(row.size());
    } else if (static_cast<int>(row.size()) != grid.cols) {
      throw InvalidCharacter("grid rows must all have the same length");
    }
    for (char ch : row) {
      switch (ch) {
        case '0': grid.cells.push_back(Cell::tails); break;
        case '1': grid.cells.push_back(Cell::heads); break;
        case '.': grid.cells.push_back(Cell::empty); break;
        default:
          throw InvalidCharacter("invalid character '" + std::string(1, ch) +
                                 "' in grid (expected 0/1/.)");
      }
    }
    ++grid.rows;
  };
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      push_row(text.substr(row_start, i - row_start));
      row_start = i + 1;
    }
  }
  return grid;
}

std::string format(const Grid& grid) {
  std::string out;
  out.reserve(grid.cells.size() + grid.rows);
  for (int r = 0; r < grid.rows; ++r) {
    if (r > 0) out += '/';
    for (int c = 0; c < grid.cols; ++c) {
      switch (grid.cells[static_cast<std::size_t>(r) * grid.cols + c]) {
        case Cell::heads: out += '1'; break;
        case Cell::tails: out += '0'; break;
        default: out += '.'; break;
      }
    }
  }
  return out;
}

Grid apply_move_grid(const Grid& grid, int row, int col) {
  if (row < 1 || row > grid.rows || col < 1 || col > grid.cols)
    throw PositionOutOfRange("cell (" + std::to_string(row) + "," + std::to_string(col) +
                             ") not in " + std::to_string(grid.rows) + "x" +
                             std::to_string(grid.cols) + " grid");
  const std::size_t index = static_cast<std::size_t>(row - 1) * grid.cols + (col - 1);
  if (grid.cells[index] != Cell::heads)
    throw CoinNotHeads("cell (" + std::to_string(row) + "," + std::to_string(col) +
                       ") is not heads-up");
  Grid out = grid;
  out.cells[index] = Cell::empty;
  auto flip_if_coin = [&](int r, int c) {
    if (r < 1 || r > out.rows || c < 1 || c > out.cols) return;
    Cell& cell = out.cells[static_cast<std::size_t>(r - 1) * out.cols + (c - 1)];
    if (cell == Cell::heads) cell = Cell::tails;
    else if (cell == Cell::tails) cell = Cell::heads;
  };
  flip_if_coin(row - 1, col);
  flip_if_coin(row + 1, col);
  flip_if_coin(row, col - 1);
  flip_if_coin(row, col + 1);
  return out;
}

std::vector<int> legal_moves(const Grid& grid) {
  std::vector<int> moves;
  for (std::size_t i = 0; i < grid.cells.size(); ++i)
    if (grid.cells[i] == Cell::heads) moves.push_back(static_cast<int>(i) + 1);
  return moves;
}

Grid apply_move(const Grid& grid, int pos) {
  if (pos < 1 || pos > grid.rows * grid.cols)
    throw PositionOutOfRange("position " + std::to_string(pos) + " not in 1.." +
                             std::to_string(grid.rows * grid.cols));
  const int row = (pos - 1) / grid.cols + 1;
  const int col = (pos - 1) % grid.cols + 1;
  return apply_move_grid(grid, row, col);
}

int heads_count(const Grid& grid) {
  return static_cast<int>(std::count(grid.cells.begin(), grid.cells.end(), Cell::heads));
}

int coin_count(const Grid& grid) {
  return static_cast<int>(grid.cells.size() -
                          std::count(grid.cells.begin(), grid.cells.end(), Cell::empty));
}

bool is_cleared(const Grid& grid) { return coin_count(grid) == 0; }

Variant variant_of(const Grid&) { return Variant::grid; }

namespace {

void check_grid_guard(const Grid& grid) {
  if (grid.rows * grid.cols > kGridCellLimit)
    throw SizeGuardExceeded("grid search limited to " + std::to_string(kGridCellLimit) +
                            " cells, got " + std::to_string(grid.rows * grid.cols));
}

}  // namespace

SearchResult grid_removable_bruteforce(const Grid& grid) {
  check_grid_guard(grid);
  return detail::search_removable(grid, nullptr, true);
}

SearchResult grid_removable_bruteforce(const Grid& grid, SearchMemo& memo) {
  check_grid_guard(grid);
  return detail::search_removable(grid, &memo, true);
}

namespace {

bool in_excluded_family(const Grid& grid) {
  // First and last columns all tails, interior in aligned {00,11} blocks.
  for (int r = 1; r <= grid.rows; ++r) {
    if (grid.at(r, 1) != Cell::tails || grid.at(r, grid.cols) != Cell::tails) return false;
    for (int c = 2; c + 1 <= grid.cols - 1; c += 2)
      if (grid.at(r, c) != grid.at(r, c + 1)) return false;
  }
  return true;
}

}  // namespace

AnyConfig parse_any(std::string_view text, Variant variant) {
  switch (variant) {
    case Variant::line_no_gaps: return parse_linear(text);
    case Variant::line_gaps: return parse_gapped_linear(text);
    case Variant::circle_no_gaps: return parse_circular(text);
    case Variant::circle_gaps: return parse_gapped_circular(text);
    case Variant::grid: return parse_grid(text);
  }
  throw Error("unknown variant tag");
}

std::string format(const AnyConfig& config) {
  return std::visit([](const auto& c) { return format(c); }, config);
}

bool siler_predicate(const Grid& grid) {
  if (std::find(grid.cells.begin(), grid.cells.end(), Cell::empty) != grid.cells.end())
    throw UnsupportedShape("the characterization covers grids without empty positions");
  const int heads = heads_count(grid);
  if (grid.cols % 2 == 1) return heads % 2 == 1;
  if (grid.rows == 2) return heads > 0 && heads % 2 == 0 && !in_excluded_family(grid);
  throw UnsupportedShape("no characterization for " + std::to_string(grid.rows) + "x" +
                         std::to_string(grid.cols) + " grids (need 2 rows or odd columns)");
}

}  // namespace coinrm
