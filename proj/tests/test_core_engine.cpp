#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coinrm/moves.hpp"
#include "support.hpp"

using namespace coinrm;

TEST_CASE("parse and format round-trip") {
  CHECK(format(parse_linear("01110")) == "01110");
  CHECK(parse_linear("01110").coins ==
        std::vector<Coin>{Coin::tails, Coin::heads, Coin::heads, Coin::heads, Coin::tails});
  CHECK(format(parse_linear("")) == "");
  CHECK(format(parse_gapped_linear("1.010")) == "1.010");
  CHECK(format(parse_circular("10010")) == "10010");
  CHECK(format(parse_gapped_circular(".10.1")) == ".10.1");

  CHECK_THROWS_AS(parse_linear("10x1"), InvalidCharacter);
  CHECK_THROWS_AS(parse_linear("1.0"), InvalidCharacter);  // no gaps in this encoding
  CHECK_THROWS_AS(parse_gapped_linear("1,0"), InvalidCharacter);

  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    int n = static_cast<int>(rng() % 12);
    std::string text;
    for (int i = 0; i < n; ++i) text += "01."[rng() % 3];
    CHECK(format(parse_gapped_linear(text)) == text);
  }
}

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::line_no_gaps, Variant::line_gaps, Variant::circle_no_gaps,
                    Variant::circle_gaps, Variant::grid})
    CHECK(variant_from_name(variant_name(v)) == v);
  CHECK_THROWS_AS(variant_from_name("triangle"), Error);
}

TEST_CASE("no-gaps move semantics") {
  CHECK(format(apply_move_no_gaps(parse_linear("11101"), 3)) == "1011");
  CHECK(format(apply_move_no_gaps(parse_linear("1"), 1)) == "");
  CHECK(format(apply_move_no_gaps(parse_linear("110110"), 5)) == "11001");

  CHECK_THROWS_AS(apply_move_no_gaps(parse_linear("110"), 0), PositionOutOfRange);
  CHECK_THROWS_AS(apply_move_no_gaps(parse_linear("110"), 4), PositionOutOfRange);
  CHECK_THROWS_AS(apply_move_no_gaps(parse_linear("110"), 3), CoinNotHeads);
}

TEST_CASE("with-gaps move semantics") {
  CHECK(format(apply_move_with_gaps(parse_gapped_linear("01110"), 2)) == "1.010");
  CHECK(format(apply_move_with_gaps(parse_gapped_linear("1.010"), 1)) == "..010");
  CHECK(format(apply_move_with_gaps(parse_gapped_linear("1"), 1)) == ".");

  CHECK_THROWS_AS(apply_move_with_gaps(parse_gapped_linear("01"), 1), CoinNotHeads);
  CHECK_THROWS_AS(apply_move_with_gaps(parse_gapped_linear(".1"), 1), CoinNotHeads);
  CHECK_THROWS_AS(apply_move_with_gaps(parse_gapped_linear("1"), 2), PositionOutOfRange);
}

TEST_CASE("circular move semantics") {
  CHECK(format(apply_move_circular(parse_circular("10010"), 1)) == "1011");
  CHECK(format(apply_move_circular(parse_circular("11"), 1)) == "0");
  CHECK(format(apply_move_circular(parse_circular("1"), 1)) == "");
  // wrap-around flips both ends
  CHECK(format(apply_move_circular(parse_circular("00001"), 5)) == "1001");
  CHECK_THROWS_AS(apply_move_circular(parse_circular("01"), 1), CoinNotHeads);
}

TEST_CASE("circular with-gaps move semantics") {
  CHECK(format(apply_move_circular_with_gaps(parse_gapped_circular("10010"), 1)) == ".1011");
  CHECK(format(apply_move_circular_with_gaps(parse_gapped_circular("10"), 1)) == ".1");
  CHECK(format(apply_move_circular_with_gaps(parse_gapped_circular("1"), 1)) == ".");
  // empty neighbours are unaffected; the ring wraps for the others
  CHECK(format(apply_move_circular_with_gaps(parse_gapped_circular("1.1"), 1)) == "..0");
  CHECK(format(apply_move_circular_with_gaps(parse_gapped_circular("0.001"), 5)) == "1.01.");
}

TEST_CASE("legal moves are the heads positions, ascending") {
  CHECK(legal_moves(parse_linear("0110")) == std::vector<int>{2, 3});
  CHECK(legal_moves(parse_linear("0000")) == std::vector<int>{});
  CHECK(legal_moves(parse_gapped_linear("1.01")) == std::vector<int>{1, 4});
  CHECK(legal_moves(parse_circular("101")) == std::vector<int>{1, 3});
}

TEST_CASE("worked removal chain with gaps: 01110") {
  GappedLinearConfig state = parse_gapped_linear("01110");
  const std::vector<std::pair<int, std::string>> chain = {
      {2, "1.010"}, {1, "..010"}, {4, "..1.1"}, {3, "....1"}, {5, "....."}};
  for (const auto& [pos, after] : chain) {
    state = apply_move_with_gaps(state, pos);
    CHECK(format(state) == after);
  }
  CHECK(is_cleared(state));
}

TEST_CASE("worked removal chain without gaps: 11101") {
  LinearConfig state = parse_linear("11101");
  const std::vector<std::pair<int, std::string>> chain = {
      {3, "1011"}, {3, "110"}, {2, "01"}, {2, "1"}, {1, ""}};
  for (const auto& [pos, after] : chain) {
    state = apply_move_no_gaps(state, pos);
    CHECK(format(state) == after);
  }
  CHECK(is_cleared(state));
}

TEST_CASE("move effects on length and untouched cells") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 400; ++iter) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::string text;
    for (int i = 0; i < n; ++i) text += (rng() % 2 != 0) ? '1' : '0';
    LinearConfig line = parse_linear(text);
    GappedLinearConfig gapped = to_gapped(line);
    for (int pos : legal_moves(line)) {
      LinearConfig next = apply_move_no_gaps(line, pos);
      CHECK(next.coins.size() + 1 == line.coins.size());

      GappedLinearConfig gnext = apply_move_with_gaps(gapped, pos);
      CHECK(gnext.cells.size() == gapped.cells.size());
      CHECK(coin_count(gnext) + 1 == coin_count(gapped));
      for (int i = 1; i <= n; ++i) {
        if (i >= pos - 1 && i <= pos + 1) continue;
        CHECK(gnext.cells[i - 1] == gapped.cells[i - 1]);
      }
    }
  }
}

TEST_CASE("engine reversal symmetry") {
  for (int n = 1; n <= 9; ++n) {
    for (const std::string& word : testsupport::binary_words(n)) {
      LinearConfig cfg = parse_linear(word);
      for (int pos : legal_moves(cfg)) {
        LinearConfig lhs = apply_move_no_gaps(reversed(cfg), n + 1 - pos);
        LinearConfig rhs = reversed(apply_move_no_gaps(cfg, pos));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("trace replay validation") {
  MoveTrace good{Variant::line_no_gaps,
                 "11101",
                 {{3, "1011"}, {3, "110"}, {2, "01"}, {2, "1"}, {1, ""}}};
  CHECK(replays_to_empty(good));

  MoveTrace wrong_state = good;
  wrong_state.steps[1].after = "011";
  CHECK_FALSE(replays_to_empty(wrong_state));

  MoveTrace illegal = good;
  illegal.steps[0].position = 4;  // tails-up coin
  CHECK_FALSE(replays_to_empty(illegal));

  MoveTrace incomplete{Variant::line_no_gaps, "11101", {{3, "1011"}}};
  CHECK_FALSE(replays_to_empty(incomplete));

  MoveTrace empty_start{Variant::circle_gaps, "", {}};
  CHECK(replays_to_empty(empty_start));
}
