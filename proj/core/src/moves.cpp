#include "coinrm/moves.hpp"

namespace coinrm {

namespace {

void check_position(int pos, std::size_t size) {
  if (pos < 1 || static_cast<std::size_t>(pos) > size)
    throw PositionOutOfRange("position " + std::to_string(pos) + " not in 1.." +
                             std::to_string(size));
}

Coin flipped(Coin c) { return c == Coin::heads ? Coin::tails : Coin::heads; }

void flip_if_coin(Cell& c) {
  if (c == Cell::heads) c = Cell::tails;
  else if (c == Cell::tails) c = Cell::heads;
}

// 1-based cyclic neighbours of pos in a ring of n >= 2 positions.
std::pair<int, int> ring_neighbours(int pos, int n) {
  int left = pos == 1 ? n : pos - 1;
  int right = pos == n ? 1 : pos + 1;
  return {left, right};
}

}  // namespace

LinearConfig apply_move_no_gaps(const LinearConfig& cfg, int pos) {
  check_position(pos, cfg.coins.size());
  if (cfg.coins[pos - 1] != Coin::heads)
    throw CoinNotHeads("coin at position " + std::to_string(pos) + " is not heads-up");
  LinearConfig out = cfg;
  if (pos >= 2) out.coins[pos - 2] = flipped(out.coins[pos - 2]);
  if (static_cast<std::size_t>(pos) < out.coins.size()) out.coins[pos] = flipped(out.coins[pos]);
  out.coins.erase(out.coins.begin() + (pos - 1));
  return out;
}

GappedLinearConfig apply_move_with_gaps(const GappedLinearConfig& cfg, int pos) {
  check_position(pos, cfg.cells.size());
  if (cfg.cells[pos - 1] != Cell::heads)
    throw CoinNotHeads("cell at position " + std::to_string(pos) + " is not heads-up");
  GappedLinearConfig out = cfg;
  out.cells[pos - 1] = Cell::empty;
  if (pos >= 2) flip_if_coin(out.cells[pos - 2]);
  if (static_cast<std::size_t>(pos) < out.cells.size()) flip_if_coin(out.cells[pos]);
  return out;
}

CircularConfig apply_move_circular(const CircularConfig& cfg, int pos) {
  const int n = static_cast<int>(cfg.coins.size());
  check_position(pos, cfg.coins.size());
  if (cfg.coins[pos - 1] != Coin::heads)
    throw CoinNotHeads("coin at position " + std::to_string(pos) + " is not heads-up");
  CircularConfig out = cfg;
  if (n >= 2) {
    auto [left, right] = ring_neighbours(pos, n);
    out.coins[left - 1] = flipped(out.coins[left - 1]);
    if (right != left) out.coins[right - 1] = flipped(out.coins[right - 1]);
  }
  out.coins.erase(out.coins.begin() + (pos - 1));
  return out;
}

GappedCircularConfig apply_move_circular_with_gaps(const GappedCircularConfig& cfg, int pos) {
  const int n = static_cast<int>(cfg.cells.size());
  check_position(pos, cfg.cells.size());
  if (cfg.cells[pos - 1] != Cell::heads)
    throw CoinNotHeads("cell at position " + std::to_string(pos) + " is not heads-up");
  GappedCircularConfig out = cfg;
  out.cells[pos - 1] = Cell::empty;
  if (n >= 2) {
    auto [left, right] = ring_neighbours(pos, n);
    flip_if_coin(out.cells[left - 1]);
    if (right != left) flip_if_coin(out.cells[right - 1]);
  }
  return out;
}

namespace {

template <class Seq, class Head>
std::vector<int> heads_positions(const Seq& seq, Head head) {
  std::vector<int> moves;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == head) moves.push_back(static_cast<int>(i) + 1);
  return moves;
}

}  // namespace

std::vector<int> legal_moves(const LinearConfig& c) { return heads_positions(c.coins, Coin::heads); }
std::vector<int> legal_moves(const GappedLinearConfig& c) { return heads_positions(c.cells, Cell::heads); }
std::vector<int> legal_moves(const CircularConfig& c) { return heads_positions(c.coins, Coin::heads); }
std::vector<int> legal_moves(const GappedCircularConfig& c) { return heads_positions(c.cells, Cell::heads); }

LinearConfig apply_move(const LinearConfig& c, int pos) { return apply_move_no_gaps(c, pos); }
GappedLinearConfig apply_move(const GappedLinearConfig& c, int pos) { return apply_move_with_gaps(c, pos); }
CircularConfig apply_move(const CircularConfig& c, int pos) { return apply_move_circular(c, pos); }
GappedCircularConfig apply_move(const GappedCircularConfig& c, int pos) {
  return apply_move_circular_with_gaps(c, pos);
}

}  // namespace coinrm
