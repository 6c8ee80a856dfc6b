#include "coinrm/solver.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "coinrm/detail/search.hpp"
#include "coinrm/parity.hpp"

namespace coinrm {

std::optional<bool> SearchMemo::find(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = verdicts_.find(key);
  if (it == verdicts_.end()) return std::nullopt;
  return it->second;
}

void SearchMemo::insert(const std::string& key, bool verdict) {
  std::lock_guard<std::mutex> lock(mutex_);
  verdicts_.emplace(key, verdict);
}

std::size_t SearchMemo::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return verdicts_.size();
}

namespace {

template <class Config>
void check_search_guard(const Config& cfg) {
  if (coin_count(cfg) > kSearchCoinLimit)
    throw SizeGuardExceeded("search limited to " + std::to_string(kSearchCoinLimit) +
                            " coins, got " + std::to_string(coin_count(cfg)));
}

}  // namespace

SearchResult brute_force_removable(const LinearConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, true);
}
SearchResult brute_force_removable(const GappedLinearConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, true);
}
SearchResult brute_force_removable(const CircularConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, true);
}
SearchResult brute_force_removable(const GappedCircularConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, true);
}

SearchResult brute_force_removable(const LinearConfig& cfg, SearchMemo& memo) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, &memo, true);
}
SearchResult brute_force_removable(const GappedLinearConfig& cfg, SearchMemo& memo) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, &memo, true);
}
SearchResult brute_force_removable(const CircularConfig& cfg, SearchMemo& memo) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, &memo, true);
}
SearchResult brute_force_removable(const GappedCircularConfig& cfg, SearchMemo& memo) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, &memo, true);
}

SearchResult brute_force_removable_unmemoized(const LinearConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, false);
}
SearchResult brute_force_removable_unmemoized(const GappedLinearConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, false);
}
SearchResult brute_force_removable_unmemoized(const CircularConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, false);
}
SearchResult brute_force_removable_unmemoized(const GappedCircularConfig& cfg) {
  check_search_guard(cfg);
  return detail::search_removable(cfg, nullptr, false);
}

std::optional<MoveTrace> greedy_solve(const LinearConfig& seq) {
  MoveTrace trace;
  trace.variant = Variant::line_no_gaps;
  trace.initial = format(seq);
  LinearConfig current = seq;
  while (!current.coins.empty()) {
    const std::vector<int> heads = legal_moves(current);
    int chosen = 0;
    LinearConfig next;
    for (std::size_t k = 0; k < heads.size() && k < 2; ++k) {
      LinearConfig candidate = apply_move_no_gaps(current, heads[k]);
      if (candidate.coins.empty() || heads_count(candidate) > 0) {
        chosen = heads[k];
        next = std::move(candidate);
        break;
      }
    }
    if (chosen == 0) return std::nullopt;
    trace.steps.push_back({chosen, format(next)});
    current = std::move(next);
  }
  return trace;
}

bool is_reducible(const LinearConfig& from, const LinearConfig& to) {
  check_search_guard(from);
  if (to.coins.size() > from.coins.size()) return false;
  const std::string target = format(to);
  const std::size_t target_len = to.coins.size();
  std::unordered_set<std::string> visited;
  std::vector<LinearConfig> stack{from};
  visited.insert(format(from));
  while (!stack.empty()) {
    LinearConfig current = std::move(stack.back());
    stack.pop_back();
    if (format(current) == target) return true;
    if (current.coins.size() <= target_len) continue;  // moves only shrink
    for (int pos : legal_moves(current)) {
      LinearConfig child = apply_move_no_gaps(current, pos);
      if (visited.insert(format(child)).second) stack.push_back(std::move(child));
    }
  }
  return false;
}

namespace {

bool mover_wins(const GappedLinearConfig& cfg, SearchMemo& memo, std::mt19937_64* rng) {
  std::vector<int> moves = legal_moves(cfg);
  if (moves.empty()) return false;  // cannot pick up a coin: the mover loses
  const std::string key = "W:" + format(cfg);
  if (auto cached = memo.find(key)) return *cached;
  if (rng != nullptr) std::shuffle(moves.begin(), moves.end(), *rng);
  bool wins = false;
  for (int pos : moves) {
    if (!mover_wins(apply_move_with_gaps(cfg, pos), memo, rng)) {
      wins = true;
      break;
    }
  }
  memo.insert(key, wins);
  return wins;
}

}  // namespace

GameOutcome game_winner(const GappedLinearConfig& cfg) {
  SearchMemo memo;
  return game_winner(cfg, memo);
}

GameOutcome game_winner(const GappedLinearConfig& cfg, SearchMemo& memo) {
  check_search_guard(cfg);
  return mover_wins(cfg, memo, nullptr) ? GameOutcome::first_wins : GameOutcome::second_wins;
}

GameOutcome game_winner_shuffled(const GappedLinearConfig& cfg, std::uint64_t seed) {
  check_search_guard(cfg);
  SearchMemo memo;
  std::mt19937_64 rng(seed);
  return mover_wins(cfg, memo, &rng) ? GameOutcome::first_wins : GameOutcome::second_wins;
}

EnumerationResult enumerate_removable(int n, Variant variant, bool collect_words) {
  if (n < 0 || n > kSearchCoinLimit)
    throw SizeGuardExceeded("enumeration limited to lengths 0.." +
                            std::to_string(kSearchCoinLimit) + ", got " + std::to_string(n));
  EnumerationResult result;
  SearchMemo memo;
  std::string word(static_cast<std::size_t>(n), '0');
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    for (int i = 0; i < n; ++i) word[i] = (bits >> i) & 1UL ? '1' : '0';
    bool removable = false;
    switch (variant) {
      case Variant::line_no_gaps:
        removable = brute_force_removable(parse_linear(word), memo).removable;
        break;
      case Variant::line_gaps:
        removable = brute_force_removable(to_gapped(parse_linear(word)), memo).removable;
        break;
      case Variant::circle_no_gaps:
        removable = brute_force_removable(parse_circular(word), memo).removable;
        break;
      case Variant::circle_gaps:
        removable = brute_force_removable(to_gapped(parse_circular(word)), memo).removable;
        break;
      case Variant::grid:
        throw UnsupportedShape("enumeration covers the 1-D variants only");
    }
    if (removable) {
      ++result.count;
      if (collect_words) result.words.push_back(word);
    }
  }
  if (collect_words) std::sort(result.words.begin(), result.words.end());
  return result;
}

}  // namespace coinrm
