#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coinrm/dfa.hpp"
#include "coinrm/parity.hpp"
#include "support.hpp"

using namespace coinrm;
using testsupport::binary_words;

namespace {

// Adjacency matrix of the minimized recognizer as printed, start state 1,
// accept states {2,4} (0-based: start 0, accepts {1,3}).
CountMatrix published_matrix() {
  const int rows[5][5] = {{0, 1, 0, 0, 1},
                          {0, 1, 1, 0, 0},
                          {0, 0, 0, 2, 0},
                          {0, 1, 1, 0, 0},
                          {1, 0, 0, 1, 0}};
  CountMatrix m;
  m.m.assign(5, std::vector<BigInt>(5, 0));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m.m[i][j] = rows[i][j];
  return m;
}

std::vector<int> accepting_states(const Dfa& dfa) {
  std::vector<int> accepts;
  for (int s = 0; s < dfa.state_count(); ++s)
    if (dfa.accept[s]) accepts.push_back(s);
  return accepts;
}

}  // namespace

TEST_CASE("recognizer structure and examples") {
  const Dfa dfa = build_recognizer();
  CHECK(dfa.state_count() == 8);
  CHECK(run(dfa, "1010011").accepted);
  CHECK(run(dfa, "1010011").path.size() == 8);
  CHECK_FALSE(run(dfa, "").accepted);
  CHECK(run(dfa, "").path == std::vector<int>{dfa.start});
  CHECK_FALSE(run(dfa, "11111").accepted);
  CHECK_THROWS_AS(run(dfa, "10a"), InvalidSymbol);

  std::set<std::string> accepted3;
  for (const std::string& word : binary_words(3))
    if (run(dfa, word).accepted) accepted3.insert(word);
  CHECK(accepted3 == std::set<std::string>{"001", "011", "100", "110", "111"});
}

TEST_CASE("recognizer decides the language of the parity predicate") {
  const Dfa dfa = build_recognizer();
  for (int n = 1; n <= 14; ++n) {
    for (const std::string& word : binary_words(n)) {
      REQUIRE(run(dfa, word).accepted == is_removable_linear_no_gaps(parse_linear(word)));
    }
  }
}

TEST_CASE("minimization yields the published 5-state automaton") {
  const Dfa dfa = build_recognizer();
  const Dfa minimized = minimize(dfa);
  CHECK(minimized.state_count() == 5);
  CHECK(minimized.start == 0);

  // idempotent
  CHECK(minimize(minimized).state_count() == 5);

  // language equality, exhaustively
  for (int n = 0; n <= 16; ++n)
    for (const std::string& word : binary_words(n))
      REQUIRE(run(dfa, word).accepted == run(minimized, word).accepted);

  // adjacency matrix equals the printed one up to relabeling
  CHECK(adjacency_matrix(minimized).size() == 5);
  CHECK(matrix_permutation_equivalent(adjacency_matrix(minimized), minimized.start,
                                      accepting_states(minimized), published_matrix(), 0,
                                      {1, 3}));
}

TEST_CASE("minimization output is deterministic") {
  const Dfa a = minimize(build_recognizer());
  const Dfa b = minimize(build_recognizer());
  CHECK(a.next == b.next);
  CHECK(a.accept == b.accept);
  CHECK(a.start == b.start);
}

TEST_CASE("adjacency matrix row sums equal the alphabet size") {
  for (const Dfa& dfa : {build_recognizer(), minimize(build_recognizer())}) {
    CountMatrix m = adjacency_matrix(dfa);
    for (int i = 0; i < m.size(); ++i) {
      BigInt row_sum = 0;
      for (int j = 0; j < m.size(); ++j) row_sum += m.m[i][j];
      CHECK(row_sum == 2);
    }
  }

  Dfa loop;
  loop.start = 0;
  loop.next = {{0, 0}};
  loop.accept = {false};
  CountMatrix m = adjacency_matrix(loop);
  CHECK(m.size() == 1);
  CHECK(m.m[0][0] == 2);
}

TEST_CASE("matrix powers count labelled paths") {
  const Dfa dfa = minimize(build_recognizer());
  const CountMatrix adjacency = adjacency_matrix(dfa);
  for (int n = 0; n <= 8; ++n) {
    CountMatrix power = matrix_power(adjacency, static_cast<unsigned long>(n));
    std::vector<std::vector<long long>> counts(
        static_cast<std::size_t>(dfa.state_count()),
        std::vector<long long>(static_cast<std::size_t>(dfa.state_count()), 0));
    for (const std::string& word : binary_words(n)) {
      for (int from = 0; from < dfa.state_count(); ++from) {
        int state = from;
        for (char ch : word) state = dfa.next[state][ch - '0'];
        ++counts[from][state];
      }
    }
    for (int i = 0; i < dfa.state_count(); ++i)
      for (int j = 0; j < dfa.state_count(); ++j)
        REQUIRE(power.m[i][j] == counts[i][j]);
  }
}

TEST_CASE("counting removable sequences") {
  const std::vector<long long> expected{0, 1, 2, 5, 10, 21, 42, 85, 170, 341};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CHECK(count_removable(n, CountMethod::matrix) == expected[n]);
    CHECK(count_removable(n, CountMethod::recurrence) == expected[n]);
    CHECK(count_removable(n, CountMethod::enumerate) == expected[n]);
  }
  // matrix and recurrence stay in lockstep well past word-size counts
  CountSequences s = recurrence_r(60);
  for (int n = 1; n <= 60; ++n)
    REQUIRE(count_removable(static_cast<unsigned long>(n), CountMethod::matrix) == s.r[n]);

  CHECK_THROWS_AS(count_removable(21, CountMethod::enumerate), MethodRangeExceeded);
}

TEST_CASE("auxiliary sequences from the first row of M^n") {
  CountSequences s = recurrence_r(30);

  // r is the A000975 prefix
  const std::vector<long long> r_prefix{1, 2, 5, 10, 21, 42, 85, 170, 341};
  for (std::size_t n = 1; n <= r_prefix.size(); ++n) REQUIRE(s.r[n] == r_prefix[n - 1]);

  // b is the Jacobsthal sequence
  const std::vector<long long> jacobsthal{1, 1, 3, 5, 11, 21, 43};
  for (std::size_t n = 1; n <= jacobsthal.size(); ++n) REQUIRE(s.b[n] == jacobsthal[n - 1]);

  for (int n = 1; n <= 29; ++n) {
    REQUIRE(s.r[n] == s.b[n] + s.d[n]);
    REQUIRE(s.d[n + 1] == s.r[n]);
    if (n >= 2) {
      REQUIRE(s.b[n + 1] == s.b[n] + 2 * s.b[n - 1]);
      REQUIRE(s.d[n + 1] == s.d[n] + 2 * s.d[n - 1] + 1);
    }
    if (n >= 3) {
      REQUIRE(s.a[n] + s.a[n - 1] == 1);
      REQUIRE(s.a[n] == s.a[n - 2]);
    }
  }

  // seeds match the first row of M
  CHECK(s.a[1] == 0);
  CHECK(s.b[1] == 1);
  CHECK(s.c[1] == 0);
  CHECK(s.d[1] == 0);
  CHECK(s.e[1] == 1);

  // the first row of actual matrix powers agrees with (a,b,c,d,e) up to the
  // minimized automaton's relabeling: compare the accept-entry total
  for (int n = 1; n <= 12; ++n) {
    const Dfa dfa = minimize(build_recognizer());
    CountMatrix power = matrix_power(adjacency_matrix(dfa), static_cast<unsigned long>(n));
    BigInt total = 0;
    for (int a : accepting_states(dfa)) total += power.m[dfa.start][a];
    REQUIRE(total == s.r[n]);
  }
}

TEST_CASE("dot export") {
  const Dfa minimized = minimize(build_recognizer());
  const std::string dot = export_dot(minimized);
  CHECK(dot == export_dot(minimized));  // stable output
  CHECK(dot.rfind("digraph", 0) == 0);

  auto count_occurrences = [](const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos;
         at = text.find(needle, at + needle.size()))
      ++count;
    return count;
  };
  CHECK(count_occurrences(dot, "[label=") == 10);
  CHECK(count_occurrences(dot, "[shape=doublecircle]") == 2);
  CHECK(count_occurrences(dot, "[shape=circle]") == 3);

  Dfa loop;
  loop.start = 0;
  loop.next = {{0, 0}};
  loop.accept = {true};
  const std::string small = export_dot(loop);
  CHECK(count_occurrences(small, "[label=") == 2);
  CHECK(count_occurrences(small, "[shape=doublecircle]") == 1);
}
