#include "coinrm/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace coinrm {

Dfa build_recognizer() {
  // State: (accumulator mod 3, zero parity, seen a head), discovered
  // breadth-first from (0,0,false) so ids are reproducible.
  using State = std::tuple<int, int, int>;
  std::map<State, int> ids;
  std::deque<State> queue;
  std::vector<State> order;

  auto intern = [&](const State& s) {
    auto [it, inserted] = ids.emplace(s, static_cast<int>(order.size()));
    if (inserted) {
      order.push_back(s);
      queue.push_back(s);
    }
    return it->second;
  };

  auto step = [](const State& s, int symbol) -> State {
    auto [acc, parity, seen] = s;
    if (symbol == 0) return {acc, parity ^ 1, seen};
    return {(acc + (parity != 0 ? 2 : 1)) % 3, parity, 1};
  };

  Dfa dfa;
  dfa.start = intern({0, 0, 0});
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    int from = ids.at(s);
    if (static_cast<int>(dfa.next.size()) <= from) {
      dfa.next.resize(from + 1);
      dfa.accept.resize(from + 1);
    }
    for (int symbol : {0, 1}) dfa.next[from][symbol] = intern(step(s, symbol));
    auto [acc, parity, seen] = s;
    int residue = ((acc - parity) % 3 + 3) % 3;
    dfa.accept[from] = seen != 0 && (residue == 0 || residue == 1);
  }
  // interning successors may have grown the tables past the last resize
  dfa.next.resize(order.size());
  dfa.accept.resize(order.size());
  return dfa;
}

RunResult run(const Dfa& dfa, std::string_view word) {
  RunResult result;
  int state = dfa.start;
  result.path.push_back(state);
  for (char ch : word) {
    int symbol;
    if (ch == '0') symbol = 0;
    else if (ch == '1') symbol = 1;
    else
      throw InvalidSymbol("invalid symbol '" + std::string(1, ch) + "' (expected 0/1)");
    state = dfa.next[state][symbol];
    result.path.push_back(state);
  }
  result.accepted = dfa.accept[state];
  return result;
}

namespace {

// States reachable from the start, in breadth-first discovery order.
std::vector<int> reachable_states(const Dfa& dfa) {
  std::vector<int> order;
  std::vector<bool> seen(dfa.next.size(), false);
  std::deque<int> queue{dfa.start};
  seen[dfa.start] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (int symbol : {0, 1}) {
      int t = dfa.next[s][symbol];
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

}  // namespace

Dfa minimize(const Dfa& dfa) {
  const std::vector<int> order = reachable_states(dfa);
  std::vector<int> dense(dfa.next.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) dense[order[i]] = static_cast<int>(i);
  const int n = static_cast<int>(order.size());

  std::vector<std::array<int, 2>> next(n);
  std::vector<bool> accept(n);
  for (int i = 0; i < n; ++i) {
    for (int symbol : {0, 1}) next[i][symbol] = dense[dfa.next[order[i]][symbol]];
    accept[i] = dfa.accept[order[i]];
  }

  // Moore partition refinement; class ids keyed by first occurrence.
  std::vector<int> cls(n);
  {
    std::map<bool, int> first;
    for (int i = 0; i < n; ++i) {
      auto [it, inserted] = first.emplace(accept[i], static_cast<int>(first.size()));
      cls[i] = it->second;
    }
  }
  for (;;) {
    std::map<std::tuple<int, int, int>, int> sig_ids;
    std::vector<int> refined(n);
    for (int i = 0; i < n; ++i) {
      std::tuple<int, int, int> sig{cls[i], cls[next[i][0]], cls[next[i][1]]};
      auto [it, inserted] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
      refined[i] = it->second;
    }
    bool stable = std::equal(cls.begin(), cls.end(), refined.begin());
    cls.swap(refined);
    if (stable) break;
  }

  const int class_count = 1 + *std::max_element(cls.begin(), cls.end());

  // Quotient automaton renumbered breadth-first from the start class.
  std::vector<std::array<int, 2>> class_next(class_count, {-1, -1});
  std::vector<bool> class_accept(class_count, false);
  for (int i = 0; i < n; ++i) {
    class_next[cls[i]] = {cls[next[i][0]], cls[next[i][1]]};
    class_accept[cls[i]] = accept[i];
  }

  std::vector<int> renumber(class_count, -1);
  std::deque<int> queue{cls[0]};  // dense state 0 is the start
  renumber[cls[0]] = 0;
  int assigned = 1;
  std::vector<int> bfs_order{cls[0]};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int symbol : {0, 1}) {
      int t = class_next[c][symbol];
      if (renumber[t] == -1) {
        renumber[t] = assigned++;
        bfs_order.push_back(t);
        queue.push_back(t);
      }
    }
  }

  Dfa out;
  out.start = 0;
  out.next.resize(class_count);
  out.accept.resize(class_count);
  for (int c : bfs_order) {
    int id = renumber[c];
    for (int symbol : {0, 1}) out.next[id][symbol] = renumber[class_next[c][symbol]];
    out.accept[id] = class_accept[c];
  }
  return out;
}

CountMatrix adjacency_matrix(const Dfa& dfa) {
  const int n = dfa.state_count();
  CountMatrix matrix;
  matrix.m.assign(n, std::vector<BigInt>(n, 0));
  for (int s = 0; s < n; ++s)
    for (int symbol : {0, 1}) matrix.m[s][dfa.next[s][symbol]] += 1;
  return matrix;
}

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
  const int n = a.size();
  CountMatrix out;
  out.m.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a.m[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) out.m[i][j] += a.m[i][k] * b.m[k][j];
    }
  return out;
}

CountMatrix matrix_power(const CountMatrix& base, unsigned long exponent) {
  const int n = base.size();
  CountMatrix result;
  result.m.assign(n, std::vector<BigInt>(n, 0));
  for (int i = 0; i < n; ++i) result.m[i][i] = 1;
  CountMatrix factor = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = multiply(result, factor);
    exponent >>= 1;
    if (exponent > 0) factor = multiply(factor, factor);
  }
  return result;
}

namespace {

bool try_assignments(const CountMatrix& lhs, const CountMatrix& rhs,
                     const std::vector<std::vector<int>>& candidates, std::vector<int>& map,
                     std::vector<bool>& used, std::size_t i) {
  const int n = lhs.size();
  if (i == static_cast<std::size_t>(n)) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (lhs.m[r][c] != rhs.m[map[r]][map[c]]) return false;
    return true;
  }
  for (int target : candidates[i]) {
    if (used[target]) continue;
    used[target] = true;
    map[i] = target;
    if (try_assignments(lhs, rhs, candidates, map, used, i + 1)) return true;
    used[target] = false;
  }
  return false;
}

}  // namespace

bool matrix_permutation_equivalent(const CountMatrix& lhs, int lhs_start,
                                   const std::vector<int>& lhs_accepts, const CountMatrix& rhs,
                                   int rhs_start, const std::vector<int>& rhs_accepts) {
  const int n = lhs.size();
  if (rhs.size() != n || lhs_accepts.size() != rhs_accepts.size()) return false;

  auto contains = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };

  // A state may only map to a state of the same kind (start / accepting).
  std::vector<std::vector<int>> candidates(n);
  for (int i = 0; i < n; ++i) {
    bool i_start = i == lhs_start;
    bool i_accept = contains(lhs_accepts, i);
    for (int j = 0; j < n; ++j) {
      bool j_start = j == rhs_start;
      bool j_accept = contains(rhs_accepts, j);
      if (i_start == j_start && i_accept == j_accept) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return try_assignments(lhs, rhs, candidates, map, used, 0);
}

namespace {

const Dfa& minimized_recognizer() {
  static const Dfa dfa = minimize(build_recognizer());
  return dfa;
}

std::vector<int> accepting_states(const Dfa& dfa) {
  std::vector<int> accepts;
  for (int s = 0; s < dfa.state_count(); ++s)
    if (dfa.accept[s]) accepts.push_back(s);
  return accepts;
}

}  // namespace

BigInt count_removable(unsigned long n, CountMethod method) {
  switch (method) {
    case CountMethod::matrix: {
      const Dfa& dfa = minimized_recognizer();
      CountMatrix power = matrix_power(adjacency_matrix(dfa), n);
      BigInt total = 0;
      for (int a : accepting_states(dfa)) total += power.m[dfa.start][a];
      return total;
    }
    case CountMethod::recurrence: {
      if (n == 0) return 0;
      if (n == 1) return 1;
      return recurrence_r(static_cast<int>(n)).r[n];
    }
    case CountMethod::enumerate: {
      if (n > 20)
        throw MethodRangeExceeded("enumerate method limited to n <= 20, got " +
                                  std::to_string(n));
      const Dfa& dfa = minimized_recognizer();
      BigInt total = 0;
      std::string word(n, '0');
      for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
        for (unsigned long i = 0; i < n; ++i)
          word[i] = (bits >> i) & 1UL ? '1' : '0';
        if (run(dfa, word).accepted) ++total;
      }
      return total;
    }
  }
  throw Error("unknown counting method");
}

CountSequences recurrence_r(int up_to) {
  if (up_to < 1) throw Error("recurrence_r needs up_to >= 1");
  CountSequences s;
  const std::size_t size = static_cast<std::size_t>(up_to) + 1;
  s.r.assign(size, 0);
  s.a.assign(size, 0);
  s.b.assign(size, 0);
  s.c.assign(size, 0);
  s.d.assign(size, 0);
  s.e.assign(size, 0);
  // Index 0 is the identity row (1,0,0,0,0) and r_0 = 0, so the published
  // seeds a_1 = c_1 = d_1 = 0, b_1 = e_1 = 1, r_1 = 1 all follow.
  s.a[0] = 1;
  for (int n = 1; n <= up_to; ++n) {
    s.a[n] = s.e[n - 1];
    s.b[n] = s.a[n - 1] + s.b[n - 1] + s.d[n - 1];
    s.c[n] = s.b[n - 1] + s.d[n - 1];
    s.d[n] = 2 * s.c[n - 1] + s.e[n - 1];
    s.e[n] = s.a[n - 1];
    s.r[n] = n == 1 ? BigInt(1) : s.r[n - 1] + 2 * s.r[n - 2] + 1;
  }
  return s;
}

std::string export_dot(const Dfa& dfa) {
  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  out << "  __start -> q" << dfa.start << ";\n";
  for (int s = 0; s < dfa.state_count(); ++s)
    out << "  q" << s << " [shape=" << (dfa.accept[s] ? "doublecircle" : "circle") << "];\n";
  for (int s = 0; s < dfa.state_count(); ++s)
    for (int symbol : {0, 1})
      out << "  q" << s << " -> q" << dfa.next[s][symbol] << " [label=\"" << symbol << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace coinrm
