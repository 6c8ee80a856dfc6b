#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinrm/grid.hpp"
#include "coinrm/parity.hpp"
#include "support.hpp"

using namespace coinrm;
using testsupport::binary_words;

namespace {

Grid make_grid(int rows, int cols, const std::string& flat) {
  std::string text;
  for (int r = 0; r < rows; ++r) {
    if (r > 0) text += '/';
    text += flat.substr(static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols));
  }
  return parse_grid(text);
}

}  // namespace

TEST_CASE("grid parsing and formatting") {
  Grid g = parse_grid("1010/0101");
  CHECK(g.rows == 2);
  CHECK(g.cols == 4);
  CHECK(g.at(1, 1) == Cell::heads);
  CHECK(g.at(2, 1) == Cell::tails);
  CHECK(format(g) == "1010/0101");
  CHECK(format(parse_grid("1.0/011")) == "1.0/011");

  CHECK_THROWS_AS(parse_grid(""), EmptyInputWhereForbidden);
  CHECK_THROWS_AS(parse_grid("10/"), EmptyInputWhereForbidden);
  CHECK_THROWS_AS(parse_grid("10/0"), InvalidCharacter);
  CHECK_THROWS_AS(parse_grid("1x/00"), InvalidCharacter);
}

TEST_CASE("grid move semantics") {
  CHECK(format(apply_move_grid(parse_grid("1"), 1, 1)) == ".");
  // only orthogonal coin-holding neighbours flip
  CHECK(format(apply_move_grid(parse_grid("1010/0101"), 1, 1)) == ".110/1101");
  CHECK(format(apply_move_grid(parse_grid("111/111"), 1, 2)) == "0.0/101");

  CHECK_THROWS_AS(apply_move_grid(parse_grid("10/00"), 1, 2), CoinNotHeads);
  CHECK_THROWS_AS(apply_move_grid(parse_grid("10/00"), 3, 1), PositionOutOfRange);
  CHECK_THROWS_AS(apply_move_grid(parse_grid("10/00"), 0, 1), PositionOutOfRange);
}

TEST_CASE("grid moves empty one cell and flip only coin neighbours") {
  for (const std::string& flat : binary_words(6)) {
    Grid g = make_grid(2, 3, flat);
    for (int pos : legal_moves(g)) {
      Grid next = apply_move(g, pos);
      int row = (pos - 1) / g.cols + 1;
      int col = (pos - 1) % g.cols + 1;
      CHECK(next.at(row, col) == Cell::empty);
      CHECK(coin_count(next) == coin_count(g) - 1);
      for (int r = 1; r <= g.rows; ++r) {
        for (int c = 1; c <= g.cols; ++c) {
          if (r == row && c == col) continue;
          const bool neighbour = std::abs(r - row) + std::abs(c - col) == 1;
          if (!neighbour || g.at(r, c) == Cell::empty) {
            CHECK(next.at(r, c) == g.at(r, c));
          } else {
            CHECK(next.at(r, c) != g.at(r, c));
          }
        }
      }
    }
  }
}

TEST_CASE("1xk grids behave exactly like gapped lines") {
  for (int k = 1; k <= 8; ++k) {
    for (const std::string& word : binary_words(k)) {
      Grid g = parse_grid(word);
      GappedLinearConfig line = parse_gapped_linear(word);
      REQUIRE(legal_moves(g) == legal_moves(line));
      for (int pos : legal_moves(g))
        REQUIRE(format(apply_move(g, pos)) == format(apply_move_with_gaps(line, pos)));
    }
  }
}

TEST_CASE("1xn grids reproduce the odd-heads rule") {
  SearchMemo memo;
  for (int n = 1; n <= 10; ++n) {
    for (const std::string& word : binary_words(n)) {
      Grid g = parse_grid(word);
      REQUIRE(grid_removable_bruteforce(g, memo).removable ==
              is_removable_linear_with_gaps(parse_linear(word)));
    }
  }
}

TEST_CASE("grid search examples") {
  SearchResult yes = grid_removable_bruteforce(parse_grid("1010/0101"));
  CHECK(yes.removable);
  REQUIRE(yes.trace.has_value());
  CHECK(replays_to_empty(*yes.trace));

  CHECK_FALSE(grid_removable_bruteforce(parse_grid("0110/0000")).removable);
  CHECK_FALSE(grid_removable_bruteforce(parse_grid("000/000")).removable);
  CHECK_THROWS_AS(grid_removable_bruteforce(parse_grid("1111/1111/1111/1111")),
                  SizeGuardExceeded);
}

TEST_CASE("siler predicate examples") {
  CHECK(siler_predicate(parse_grid("1010/0101")));
  CHECK_FALSE(siler_predicate(parse_grid("0110/0000")));
  CHECK(siler_predicate(parse_grid("101/010")));

  CHECK_THROWS_AS(siler_predicate(parse_grid("1010/0101/0000")), UnsupportedShape);
  CHECK_THROWS_AS(siler_predicate(parse_grid("1010")), UnsupportedShape);
  CHECK_THROWS_AS(siler_predicate(parse_grid("1.10/0101")), UnsupportedShape);
}

TEST_CASE("siler predicate matches the oracle exhaustively") {
  SearchMemo memo;
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {2, 4}, {1, 3}, {2, 3}, {3, 3}, {2, 5}};
  for (const auto& [rows, cols] : shapes) {
    for (const std::string& flat : binary_words(rows * cols)) {
      Grid g = make_grid(rows, cols, flat);
      REQUIRE(siler_predicate(g) == grid_removable_bruteforce(g, memo).removable);
    }
  }
}

TEST_CASE("tag-dispatched parsing") {
  AnyConfig line = parse_any("0110", Variant::line_no_gaps);
  CHECK(std::holds_alternative<LinearConfig>(line));
  CHECK(format(line) == "0110");
  CHECK(std::holds_alternative<GappedLinearConfig>(parse_any("1.0", Variant::line_gaps)));
  CHECK(std::holds_alternative<CircularConfig>(parse_any("10", Variant::circle_no_gaps)));
  CHECK(std::holds_alternative<GappedCircularConfig>(parse_any("1.", Variant::circle_gaps)));
  AnyConfig grid = parse_any("10/01", Variant::grid);
  CHECK(std::holds_alternative<Grid>(grid));
  CHECK(format(grid) == "10/01");
  CHECK_THROWS_AS(parse_any("2", Variant::line_no_gaps), InvalidCharacter);
}

TEST_CASE("siler predicate matches the oracle on 2x6 grids") {
  SearchMemo memo;
  for (const std::string& flat : binary_words(12)) {
    Grid g = make_grid(2, 6, flat);
    REQUIRE(siler_predicate(g) == grid_removable_bruteforce(g, memo).removable);
  }
}
