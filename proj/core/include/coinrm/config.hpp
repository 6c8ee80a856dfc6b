#pragma once

// Coin arrangements for every variant of the removal puzzle.  A heads-up
// coin prints as '1', tails-up as '0' and an empty position as '.'.
// All values are immutable in practice: operations return new configurations.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coinrm/errors.hpp"

namespace coinrm {

enum class Coin : std::uint8_t { tails = 0, heads = 1 };
enum class Cell : std::uint8_t { tails = 0, heads = 1, empty = 2 };

enum class Variant {
  line_no_gaps,   // removals close the line up
  line_gaps,      // removals leave an empty position
  circle_no_gaps,
  circle_gaps,
  grid,
};

std::string_view variant_name(Variant v);
Variant variant_from_name(std::string_view name);

// Linear arrangement, positions 1-based from the left.  May be empty.
struct LinearConfig {
  std::vector<Coin> coins;
  bool operator==(const LinearConfig&) const = default;
};

// Linear arrangement of fixed length whose positions may be empty.
struct GappedLinearConfig {
  std::vector<Cell> cells;
  bool operator==(const GappedLinearConfig&) const = default;
};

// Circular arrangement: the last position is adjacent to the first.
// Rotations of one another are distinct values (no canonical form).
struct CircularConfig {
  std::vector<Coin> coins;
  bool operator==(const CircularConfig&) const = default;
};

struct GappedCircularConfig {
  std::vector<Cell> cells;
  bool operator==(const GappedCircularConfig&) const = default;
};

LinearConfig parse_linear(std::string_view text);
GappedLinearConfig parse_gapped_linear(std::string_view text);
CircularConfig parse_circular(std::string_view text);
GappedCircularConfig parse_gapped_circular(std::string_view text);

std::string format(const LinearConfig&);
std::string format(const GappedLinearConfig&);
std::string format(const CircularConfig&);
std::string format(const GappedCircularConfig&);

GappedLinearConfig to_gapped(const LinearConfig&);
GappedCircularConfig to_gapped(const CircularConfig&);

LinearConfig reversed(const LinearConfig&);

int heads_count(const LinearConfig&);
int heads_count(const GappedLinearConfig&);
int heads_count(const CircularConfig&);
int heads_count(const GappedCircularConfig&);
int tails_count(const CircularConfig&);

// Coins still on the board (heads or tails).
int coin_count(const LinearConfig&);
int coin_count(const GappedLinearConfig&);
int coin_count(const CircularConfig&);
int coin_count(const GappedCircularConfig&);

// True when every coin has been removed.
bool is_cleared(const LinearConfig&);
bool is_cleared(const GappedLinearConfig&);
bool is_cleared(const CircularConfig&);
bool is_cleared(const GappedCircularConfig&);

Variant variant_of(const LinearConfig&);
Variant variant_of(const GappedLinearConfig&);
Variant variant_of(const CircularConfig&);
Variant variant_of(const GappedCircularConfig&);

}  // namespace coinrm
