#pragma once

// Move semantics.  Removing a heads-up coin flips the coins still present in
// the (at most) two surrounding positions; the no-gaps variants then push the
// remaining coins together.  Positions are 1-based in every interface.

#include <string>
#include <vector>

#include "coinrm/config.hpp"

namespace coinrm {

LinearConfig apply_move_no_gaps(const LinearConfig&, int pos);
GappedLinearConfig apply_move_with_gaps(const GappedLinearConfig&, int pos);
// Each distinct cyclically adjacent position flips exactly once, so in a
// two-coin circle the single other coin flips once.
CircularConfig apply_move_circular(const CircularConfig&, int pos);
GappedCircularConfig apply_move_circular_with_gaps(const GappedCircularConfig&, int pos);

// Positions holding a heads-up coin, ascending.
std::vector<int> legal_moves(const LinearConfig&);
std::vector<int> legal_moves(const GappedLinearConfig&);
std::vector<int> legal_moves(const CircularConfig&);
std::vector<int> legal_moves(const GappedCircularConfig&);

// Uniform spelling used by generic code (search, replay).
LinearConfig apply_move(const LinearConfig&, int pos);
GappedLinearConfig apply_move(const GappedLinearConfig&, int pos);
CircularConfig apply_move(const CircularConfig&, int pos);
GappedCircularConfig apply_move(const GappedCircularConfig&, int pos);

struct TraceStep {
  int position = 0;    // position removed; row-major for grids
  std::string after;   // encoding of the configuration after the move
  bool operator==(const TraceStep&) const = default;
};

// Removability certificate: replaying the steps from the initial encoding
// must reproduce every recorded state and end with all coins removed.
struct MoveTrace {
  Variant variant = Variant::line_no_gaps;
  std::string initial;
  std::vector<TraceStep> steps;
  bool operator==(const MoveTrace&) const = default;
};

bool replays_to_empty(const MoveTrace&);

}  // namespace coinrm
