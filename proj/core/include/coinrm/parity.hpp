#pragma once

// The parity sum S(A) and the closed-form removability predicates.
//
// A sequence with at least one heads-up coin decomposes as
//
//   A = 1^{h_0} 0^{t_1} 1^{h_1} ... 0^{t_n} 1^{h_n}
//
// with prefix parities p_i = (t_1 + ... + t_i) mod 2 and
//
//   S(A) = h_0 + sum_{i=1..n} (-1)^{p_i} h_i  -  p_n.
//
// S(A) mod 3 is invariant under removal of a heads-up coin (no-gaps rules)
// whenever a heads-up coin remains, which yields a constant-memory test:
// a sequence with at least one heads-up coin is removable without gaps iff
// S(A) mod 3 is 0 or 1.  The other 1-D variants have counting predicates.

#include <cstdint>
#include <vector>

#include "coinrm/config.hpp"

namespace coinrm {

// heads holds h_0..h_n, tails holds t_1..t_n (one entry fewer).  Entries may
// be zero; the canonical form uses maximal blocks, so only h_0 and h_n can
// be zero there.  S does not depend on the choice of decomposition.
struct BlockDecomposition {
  std::vector<int> heads;
  std::vector<int> tails;
  bool operator==(const BlockDecomposition&) const = default;
};

struct ParityVector {
  std::vector<int> bits;  // p_i = (t_1 + ... + t_i) mod 2
  bool operator==(const ParityVector&) const = default;
};

struct ParitySumResult {
  long long value = 0;
  int residue = 0;  // value mod 3 normalized to {0,1,2}
};

// Maximal-block decomposition.  Throws NoHeads for all-tails or empty input.
BlockDecomposition canonical_decomposition(const LinearConfig&);

ParityVector parity_vector(const std::vector<int>& tails);

// Evaluates S on any valid decomposition (|heads| == |tails| + 1).
long long evaluate_parity_sum(const BlockDecomposition&);

ParitySumResult parity_sum(const LinearConfig&);

// Same value computed from the compressed sequence A': drop every group of
// consecutive 0's of even length and concatenate the adjacent groups of 1's.
// Agrees with parity_sum exactly, not just mod 3.
ParitySumResult parity_sum_compressed(const LinearConfig&);

// Left-to-right single-pass evaluation; returns only the residue in {0,1,2}.
// This is the state the DFA recognizer tracks.
int parity_sum_streaming(const LinearConfig&);

// Removability predicates.  The empty configuration counts as removable in
// every variant; a nonempty all-tails configuration never is.
bool is_removable_linear_no_gaps(const LinearConfig&);
bool is_removable_linear_with_gaps(const LinearConfig&);
bool is_removable_circular_no_gaps(const CircularConfig&);
bool is_removable_circular_with_gaps(const CircularConfig&);

// Mid-game states: empty positions isolate the remaining coins into
// segments, each of which must be removable on its own.
bool is_removable_linear_with_gaps(const GappedLinearConfig&);
bool is_removable_circular_with_gaps(const GappedCircularConfig&);

// S evaluated forward and on the reversal, with the final zero parity p_n.
// p_n == 0 forces equal values; p_n == 1 forces forward + reversed == -2.
struct ReversalRelation {
  long long forward = 0;
  long long reversed = 0;
  int last_parity = 0;
};
ReversalRelation reversal_parity_relation(const LinearConfig&);

}  // namespace coinrm
