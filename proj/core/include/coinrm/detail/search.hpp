#pragma once

// Generic depth-first removability search shared by the 1-D variants and
// grids.  A configuration type plugs in via legal_moves / apply_move /
// is_cleared / format / variant_of overloads.

#include <cstdint>
#include <string>
#include <utility>

#include "coinrm/moves.hpp"
#include "coinrm/solver.hpp"

namespace coinrm::detail {

inline char variant_tag(Variant v) {
  switch (v) {
    case Variant::line_no_gaps: return 'L';
    case Variant::line_gaps: return 'G';
    case Variant::circle_no_gaps: return 'C';
    case Variant::circle_gaps: return 'D';
    case Variant::grid: return 'R';
  }
  return '?';
}

template <class Config>
std::string memo_key(const Config& cfg) {
  std::string key(1, variant_tag(variant_of(cfg)));
  key += ':';
  key += format(cfg);
  return key;
}

template <class Config>
bool dfs_removable(const Config& cfg, SearchMemo* memo, std::uint64_t& explored) {
  if (is_cleared(cfg)) return true;
  std::string key;
  if (memo != nullptr) {
    key = memo_key(cfg);
    if (auto cached = memo->find(key)) return *cached;
  }
  ++explored;
  bool removable = false;
  for (int pos : legal_moves(cfg)) {
    if (dfs_removable(apply_move(cfg, pos), memo, explored)) {
      removable = true;
      break;
    }
  }
  if (memo != nullptr) memo->insert(key, removable);
  return removable;
}

// Walks the winning children (lowest position first) to emit the trace.
template <class Config>
MoveTrace rebuild_trace(const Config& start, SearchMemo* memo, std::uint64_t& explored) {
  MoveTrace trace;
  trace.variant = variant_of(start);
  trace.initial = format(start);
  Config current = start;
  while (!is_cleared(current)) {
    bool advanced = false;
    for (int pos : legal_moves(current)) {
      Config child = apply_move(current, pos);
      if (dfs_removable(child, memo, explored)) {
        trace.steps.push_back({pos, format(child)});
        current = std::move(child);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // cannot happen for a removable configuration
  }
  return trace;
}

template <class Config>
SearchResult search_removable(const Config& start, SearchMemo* shared, bool memoize) {
  SearchMemo local;
  SearchMemo* memo = memoize ? (shared != nullptr ? shared : &local) : nullptr;
  SearchResult result;
  result.removable = dfs_removable(start, memo, result.states_explored);
  if (result.removable) result.trace = rebuild_trace(start, memo, result.states_explored);
  return result;
}

}  // namespace coinrm::detail
