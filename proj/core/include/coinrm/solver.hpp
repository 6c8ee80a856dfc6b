#pragma once

// Ground-truth exhaustive search for every variant, the greedy polynomial
// solver, reducibility testing, and the two-player game.

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coinrm/config.hpp"
#include "coinrm/moves.hpp"

namespace coinrm {

// Hard search guards: distinct errors, not silent truncation.
inline constexpr int kSearchCoinLimit = 16;

// Verdict cache keyed by the exact configuration encoding plus a variant
// tag.  Default searches confine a fresh memo to the invocation; a shared
// instance may be reused across searches (the map is mutex-guarded, and
// verdicts are pure, so results never depend on interleaving).
class SearchMemo {
 public:
  std::optional<bool> find(const std::string& key) const;
  void insert(const std::string& key, bool verdict);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::string, bool> verdicts_;
};

struct SearchResult {
  bool removable = false;
  std::optional<MoveTrace> trace;  // present iff removable; always replays
  std::uint64_t states_explored = 0;
};

SearchResult brute_force_removable(const LinearConfig&);
SearchResult brute_force_removable(const GappedLinearConfig&);
SearchResult brute_force_removable(const CircularConfig&);
SearchResult brute_force_removable(const GappedCircularConfig&);

SearchResult brute_force_removable(const LinearConfig&, SearchMemo&);
SearchResult brute_force_removable(const GappedLinearConfig&, SearchMemo&);
SearchResult brute_force_removable(const CircularConfig&, SearchMemo&);
SearchResult brute_force_removable(const GappedCircularConfig&, SearchMemo&);

// Reference path without a verdict cache; same answers, more work.
SearchResult brute_force_removable_unmemoized(const LinearConfig&);
SearchResult brute_force_removable_unmemoized(const GappedLinearConfig&);
SearchResult brute_force_removable_unmemoized(const CircularConfig&);
SearchResult brute_force_removable_unmemoized(const GappedCircularConfig&);

// No-gaps greedy solver: at each step remove one of the first two heads-up
// coins from the left, preferring one whose removal empties the line or
// leaves a heads-up coin.  Succeeds exactly on the removable sequences and
// produces a full trace in polynomial time; nullopt means not removable.
std::optional<MoveTrace> greedy_solve(const LinearConfig&);

// True when `to` is reachable from `from` by legal no-gaps moves.
bool is_reducible(const LinearConfig& from, const LinearConfig& to);

enum class GameOutcome { first_wins, second_wins };

// Two players alternate with-gaps moves; whoever cannot pick up a coin
// loses (including immediately, when the start position has no heads).
GameOutcome game_winner(const GappedLinearConfig&);
GameOutcome game_winner(const GappedLinearConfig&, SearchMemo&);
// Explores moves in a seeded shuffled order; the outcome must not change.
GameOutcome game_winner_shuffled(const GappedLinearConfig&, std::uint64_t seed);

struct EnumerationResult {
  long long count = 0;
  std::vector<std::string> words;  // filled only when requested
};

// Applies the search oracle to all 2^n coin arrangements of length n for a
// 1-D variant (n <= 16).  Note n = 0 counts the empty arrangement as
// removable, unlike the DFA counting convention.
EnumerationResult enumerate_removable(int n, Variant variant, bool collect_words = false);

}  // namespace coinrm
