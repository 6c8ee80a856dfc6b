#include "coinrm/parity.hpp"

#include <numeric>

namespace coinrm {

namespace {

int normalized_residue(long long value) { return static_cast<int>(((value % 3) + 3) % 3); }

ParitySumResult make_result(long long value) { return {value, normalized_residue(value)}; }

}  // namespace

BlockDecomposition canonical_decomposition(const LinearConfig& seq) {
  if (heads_count(seq) == 0)
    throw NoHeads("parity sum undefined: no heads-up coin in \"" + format(seq) + "\"");
  const auto& a = seq.coins;
  const std::size_t n = a.size();
  BlockDecomposition d;
  std::size_t i = 0;
  int run = 0;
  while (i < n && a[i] == Coin::heads) {
    ++run;
    ++i;
  }
  d.heads.push_back(run);
  while (i < n) {
    int zeros = 0;
    while (i < n && a[i] == Coin::tails) {
      ++zeros;
      ++i;
    }
    d.tails.push_back(zeros);
    int ones = 0;
    while (i < n && a[i] == Coin::heads) {
      ++ones;
      ++i;
    }
    d.heads.push_back(ones);
  }
  return d;
}

ParityVector parity_vector(const std::vector<int>& tails) {
  ParityVector p;
  p.bits.reserve(tails.size());
  int parity = 0;
  for (int t : tails) {
    parity ^= t & 1;
    p.bits.push_back(parity);
  }
  return p;
}

long long evaluate_parity_sum(const BlockDecomposition& d) {
  if (d.heads.size() != d.tails.size() + 1)
    throw Error("malformed decomposition: need one more heads block than tails blocks");
  long long s = d.heads[0];
  int parity = 0;
  for (std::size_t i = 0; i < d.tails.size(); ++i) {
    parity ^= d.tails[i] & 1;
    s += (parity != 0 ? -1LL : 1LL) * d.heads[i + 1];
  }
  return s - parity;  // n = 0 (all ones) gives S = h_0
}

ParitySumResult parity_sum(const LinearConfig& seq) {
  return make_result(evaluate_parity_sum(canonical_decomposition(seq)));
}

ParitySumResult parity_sum_compressed(const LinearConfig& seq) {
  BlockDecomposition d = canonical_decomposition(seq);
  // Groups of 1's in A': an even group of 0's merges its neighbours.
  std::vector<long long> groups;
  long long current = d.heads[0];
  for (std::size_t i = 0; i < d.tails.size(); ++i) {
    if (d.tails[i] % 2 == 0) {
      current += d.heads[i + 1];
    } else {
      groups.push_back(current);
      current = d.heads[i + 1];
    }
  }
  groups.push_back(current);
  // All remaining separators are odd, so the signs simply alternate.
  long long s = groups[0];
  for (std::size_t k = 1; k < groups.size(); ++k)
    s += (k % 2 == 1 ? -1LL : 1LL) * groups[k];
  s -= static_cast<long long>((groups.size() - 1) % 2);
  return make_result(s);
}

int parity_sum_streaming(const LinearConfig& seq) {
  bool seen_heads = false;
  int zero_parity = 0;
  int accumulator = 0;  // mod 3
  for (Coin x : seq.coins) {
    if (x == Coin::heads) {
      accumulator = (accumulator + (zero_parity != 0 ? 2 : 1)) % 3;
      seen_heads = true;
    } else {
      zero_parity ^= 1;
    }
  }
  if (!seen_heads)
    throw NoHeads("parity sum undefined: no heads-up coin in \"" + format(seq) + "\"");
  return ((accumulator - zero_parity) % 3 + 3) % 3;
}

bool is_removable_linear_no_gaps(const LinearConfig& seq) {
  if (seq.coins.empty()) return true;
  if (heads_count(seq) == 0) return false;
  const int residue = parity_sum(seq).residue;
  return residue == 0 || residue == 1;
}

bool is_removable_linear_with_gaps(const LinearConfig& seq) {
  if (seq.coins.empty()) return true;
  return heads_count(seq) % 2 == 1;
}

bool is_removable_linear_with_gaps(const GappedLinearConfig& cfg) {
  // Empty positions never interact, so each maximal coin segment must be
  // removable on its own: an odd number of heads per segment.
  int heads_in_segment = 0;
  bool in_segment = false;
  for (Cell cell : cfg.cells) {
    if (cell == Cell::empty) {
      if (in_segment && heads_in_segment % 2 == 0) return false;
      in_segment = false;
      heads_in_segment = 0;
    } else {
      in_segment = true;
      if (cell == Cell::heads) ++heads_in_segment;
    }
  }
  return !in_segment || heads_in_segment % 2 == 1;
}

bool is_removable_circular_no_gaps(const CircularConfig& circ) {
  const int n = static_cast<int>(circ.coins.size());
  if (n == 0) return true;
  if (n == 1) return circ.coins[0] == Coin::heads;
  return heads_count(circ) > 0 && tails_count(circ) % 2 == 1;
}

bool is_removable_circular_with_gaps(const CircularConfig& circ) {
  const int n = static_cast<int>(circ.coins.size());
  const int heads = heads_count(circ);
  if (n == 0) return true;
  if (n <= 2) return heads == 1;
  return heads > 0 && heads % 2 == 0;
}

bool is_removable_circular_with_gaps(const GappedCircularConfig& cfg) {
  const int n = static_cast<int>(cfg.cells.size());
  if (coin_count(cfg) == n) {
    // Full circle: fall back to the coin-only rule.
    CircularConfig circ;
    circ.coins.reserve(cfg.cells.size());
    for (Cell cell : cfg.cells)
      circ.coins.push_back(cell == Cell::heads ? Coin::heads : Coin::tails);
    return is_removable_circular_with_gaps(circ);
  }
  // At least one gap: the circle is already a line; each maximal coin
  // segment (cyclically contiguous) needs an odd number of heads.
  int start = 0;
  while (start < n && cfg.cells[start] != Cell::empty) ++start;
  int heads_in_segment = 0;
  bool in_segment = false;
  for (int k = 1; k <= n; ++k) {
    Cell cell = cfg.cells[(start + k) % n];
    if (cell == Cell::empty) {
      if (in_segment && heads_in_segment % 2 == 0) return false;
      in_segment = false;
      heads_in_segment = 0;
    } else {
      in_segment = true;
      if (cell == Cell::heads) ++heads_in_segment;
    }
  }
  return !in_segment || heads_in_segment % 2 == 1;
}

ReversalRelation reversal_parity_relation(const LinearConfig& seq) {
  BlockDecomposition d = canonical_decomposition(seq);
  ReversalRelation rel;
  rel.forward = evaluate_parity_sum(d);
  rel.reversed = evaluate_parity_sum(canonical_decomposition(reversed(seq)));
  rel.last_parity = std::accumulate(d.tails.begin(), d.tails.end(), 0) % 2;
  return rel;
}

}  // namespace coinrm
