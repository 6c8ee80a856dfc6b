#pragma once

// Recognizer for the language of sequences removable without gaps, DFA
// minimization, adjacency-matrix path counting, and the recurrence for the
// number r_n of removable sequences of length n.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coinrm/errors.hpp"

namespace coinrm {

using BigInt = boost::multiprecision::cpp_int;

// Total transition function over the alphabet {0,1}; states are dense ids.
struct Dfa {
  int start = 0;
  std::vector<std::array<int, 2>> next;  // next[state][symbol]
  std::vector<bool> accept;
  int state_count() const { return static_cast<int>(next.size()); }
};

// Streaming construction: a state is (S accumulator mod 3, parity of zeros
// read, seen a heads-up coin).  Reading '1' adds +1 or -1 to the accumulator
// depending on the zero parity; reading '0' toggles the parity.  Accepting
// states are those where a head was seen and (accumulator - parity) mod 3 is
// 0 or 1.  Exactly 8 states are reachable; minimization brings them to 5.
Dfa build_recognizer();

struct RunResult {
  bool accepted = false;
  std::vector<int> path;  // |word| + 1 states, starting at the start state
};
RunResult run(const Dfa&, std::string_view word);

// Partition refinement on the reachable part; result states are renumbered
// in breadth-first order from the start state (symbol 0 before 1), so the
// output is reproducible.
Dfa minimize(const Dfa&);

// entry (i,j) = number of symbols taking state i to state j.  Every row of
// an adjacency matrix sums to 2; entry (i,j) of the n-th power counts the
// length-n words driving state i to state j.
struct CountMatrix {
  std::vector<std::vector<BigInt>> m;
  int size() const { return static_cast<int>(m.size()); }
  bool operator==(const CountMatrix&) const = default;
};

CountMatrix adjacency_matrix(const Dfa&);
CountMatrix multiply(const CountMatrix&, const CountMatrix&);
CountMatrix matrix_power(const CountMatrix&, unsigned long exponent);

// True when some relabeling of lhs states onto rhs states maps start to
// start, accepting set onto accepting set, and entry-for-entry the matrices
// agree.  Exhaustive over the (tiny) constrained bijections.
bool matrix_permutation_equivalent(const CountMatrix& lhs, int lhs_start,
                                   const std::vector<int>& lhs_accepts,
                                   const CountMatrix& rhs, int rhs_start,
                                   const std::vector<int>& rhs_accepts);

enum class CountMethod { matrix, recurrence, enumerate };

// Number of removable length-n sequences (no-gaps rules).  n = 0 yields 0:
// the DFA rejects the empty word, even though the solver treats the empty
// configuration as solved.  Exact integer arithmetic at any n; the
// enumerate method is limited to n <= 20.
BigInt count_removable(unsigned long n, CountMethod method = CountMethod::matrix);

// First row of M^n, indexed by length (element 0 is the identity row).
// r_n = b_n + d_n with r_{n+1} = r_n + 2 r_{n-1} + 1; b is the Jacobsthal
// sequence and d satisfies d_{n+1} = r_n.
struct CountSequences {
  std::vector<BigInt> r, a, b, c, d, e;
};
CountSequences recurrence_r(int up_to);

// Graphviz DOT rendering; accept states are double circles, edges labeled
// with their symbol, output ordering deterministic.
std::string export_dot(const Dfa&);

}  // namespace coinrm
