#pragma once

// Small helpers shared by the test suites.

#include <cstdint>
#include <string>
#include <vector>

namespace testsupport {

// All words over {0,1} of exactly length n, in increasing numeric order
// (bit i of the counter is position i+1 of the word).
inline std::vector<std::string> binary_words(int n) {
  std::vector<std::string> words;
  words.reserve(std::size_t{1} << n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::string w(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
      if ((bits >> i) & 1ULL) w[static_cast<std::size_t>(i)] = '1';
    words.push_back(std::move(w));
  }
  return words;
}

// All words over {0,1,.} of exactly length n (mid-game gapped states).
inline std::vector<std::string> cell_words(int n) {
  static constexpr char kAlphabet[] = {'0', '1', '.'};
  std::vector<std::string> words;
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::string w(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = kAlphabet[digits[i]];
    words.push_back(std::move(w));
    int i = 0;
    while (i < n && digits[i] == 2) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return words;
}

inline std::string repeat(char ch, int n) { return std::string(static_cast<std::size_t>(n), ch); }

}  // namespace testsupport
