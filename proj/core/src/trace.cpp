#include "coinrm/moves.hpp"

#include "coinrm/grid.hpp"

namespace coinrm {

namespace {

template <class Config>
bool replay(Config current, const MoveTrace& trace) {
  for (const TraceStep& step : trace.steps) {
    current = apply_move(current, step.position);  // throws on an illegal move
    if (format(current) != step.after) return false;
  }
  return is_cleared(current);
}

}  // namespace

bool replays_to_empty(const MoveTrace& trace) {
  try {
    switch (trace.variant) {
      case Variant::line_no_gaps: return replay(parse_linear(trace.initial), trace);
      case Variant::line_gaps: return replay(parse_gapped_linear(trace.initial), trace);
      case Variant::circle_no_gaps: return replay(parse_circular(trace.initial), trace);
      case Variant::circle_gaps: return replay(parse_gapped_circular(trace.initial), trace);
      case Variant::grid: return replay(parse_grid(trace.initial), trace);
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

}  // namespace coinrm
