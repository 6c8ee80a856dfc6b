#include "coinrm/config.hpp"

#include <algorithm>

namespace coinrm {

namespace {

Coin coin_from_char(char ch, std::string_view text) {
  switch (ch) {
    case '0': return Coin::tails;
    case '1': return Coin::heads;
    default:
      throw InvalidCharacter("invalid character '" + std::string(1, ch) + "' in \"" +
                             std::string(text) + "\" (expected 0/1)");
  }
}

Cell cell_from_char(char ch, std::string_view text) {
  switch (ch) {
    case '0': return Cell::tails;
    case '1': return Cell::heads;
    case '.': return Cell::empty;
    default:
      throw InvalidCharacter("invalid character '" + std::string(1, ch) + "' in \"" +
                             std::string(text) + "\" (expected 0/1/.)");
  }
}

char coin_to_char(Coin c) { return c == Coin::heads ? '1' : '0'; }

char cell_to_char(Cell c) {
  switch (c) {
    case Cell::heads: return '1';
    case Cell::tails: return '0';
    default: return '.';
  }
}

std::vector<Coin> parse_coins(std::string_view text) {
  std::vector<Coin> coins;
  coins.reserve(text.size());
  for (char ch : text) coins.push_back(coin_from_char(ch, text));
  return coins;
}

std::vector<Cell> parse_cells(std::string_view text) {
  std::vector<Cell> cells;
  cells.reserve(text.size());
  for (char ch : text) cells.push_back(cell_from_char(ch, text));
  return cells;
}

}  // namespace

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::line_no_gaps: return "line-nogaps";
    case Variant::line_gaps: return "line-gaps";
    case Variant::circle_no_gaps: return "circle-nogaps";
    case Variant::circle_gaps: return "circle-gaps";
    case Variant::grid: return "grid";
  }
  return "?";
}

Variant variant_from_name(std::string_view name) {
  if (name == "line-nogaps") return Variant::line_no_gaps;
  if (name == "line-gaps") return Variant::line_gaps;
  if (name == "circle-nogaps") return Variant::circle_no_gaps;
  if (name == "circle-gaps") return Variant::circle_gaps;
  if (name == "grid") return Variant::grid;
  throw Error("unknown variant \"" + std::string(name) + "\"");
}

LinearConfig parse_linear(std::string_view text) { return {parse_coins(text)}; }

GappedLinearConfig parse_gapped_linear(std::string_view text) { return {parse_cells(text)}; }

CircularConfig parse_circular(std::string_view text) { return {parse_coins(text)}; }

GappedCircularConfig parse_gapped_circular(std::string_view text) { return {parse_cells(text)}; }

std::string format(const LinearConfig& c) {
  std::string out;
  out.reserve(c.coins.size());
  for (Coin x : c.coins) out += coin_to_char(x);
  return out;
}

std::string format(const GappedLinearConfig& c) {
  std::string out;
  out.reserve(c.cells.size());
  for (Cell x : c.cells) out += cell_to_char(x);
  return out;
}

std::string format(const CircularConfig& c) {
  std::string out;
  out.reserve(c.coins.size());
  for (Coin x : c.coins) out += coin_to_char(x);
  return out;
}

std::string format(const GappedCircularConfig& c) {
  std::string out;
  out.reserve(c.cells.size());
  for (Cell x : c.cells) out += cell_to_char(x);
  return out;
}

GappedLinearConfig to_gapped(const LinearConfig& c) {
  GappedLinearConfig out;
  out.cells.reserve(c.coins.size());
  for (Coin x : c.coins) out.cells.push_back(x == Coin::heads ? Cell::heads : Cell::tails);
  return out;
}

GappedCircularConfig to_gapped(const CircularConfig& c) {
  GappedCircularConfig out;
  out.cells.reserve(c.coins.size());
  for (Coin x : c.coins) out.cells.push_back(x == Coin::heads ? Cell::heads : Cell::tails);
  return out;
}

LinearConfig reversed(const LinearConfig& c) {
  LinearConfig out = c;
  std::reverse(out.coins.begin(), out.coins.end());
  return out;
}

namespace {

template <class Seq, class Value>
int count_of(const Seq& seq, Value v) {
  return static_cast<int>(std::count(seq.begin(), seq.end(), v));
}

}  // namespace

int heads_count(const LinearConfig& c) { return count_of(c.coins, Coin::heads); }
int heads_count(const GappedLinearConfig& c) { return count_of(c.cells, Cell::heads); }
int heads_count(const CircularConfig& c) { return count_of(c.coins, Coin::heads); }
int heads_count(const GappedCircularConfig& c) { return count_of(c.cells, Cell::heads); }
int tails_count(const CircularConfig& c) { return count_of(c.coins, Coin::tails); }

int coin_count(const LinearConfig& c) { return static_cast<int>(c.coins.size()); }
int coin_count(const GappedLinearConfig& c) {
  return static_cast<int>(c.cells.size()) - count_of(c.cells, Cell::empty);
}
int coin_count(const CircularConfig& c) { return static_cast<int>(c.coins.size()); }
int coin_count(const GappedCircularConfig& c) {
  return static_cast<int>(c.cells.size()) - count_of(c.cells, Cell::empty);
}

bool is_cleared(const LinearConfig& c) { return c.coins.empty(); }
bool is_cleared(const GappedLinearConfig& c) { return coin_count(c) == 0; }
bool is_cleared(const CircularConfig& c) { return c.coins.empty(); }
bool is_cleared(const GappedCircularConfig& c) { return coin_count(c) == 0; }

Variant variant_of(const LinearConfig&) { return Variant::line_no_gaps; }
Variant variant_of(const GappedLinearConfig&) { return Variant::line_gaps; }
Variant variant_of(const CircularConfig&) { return Variant::circle_no_gaps; }
Variant variant_of(const GappedCircularConfig&) { return Variant::circle_gaps; }

}  // namespace coinrm
