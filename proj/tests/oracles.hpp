// Copyright 2026 The overlap-gap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations. Everything here follows the
// definitions directly and shares no code with the library.

#ifndef OVERLAP_GAP_TESTS_ORACLES_HPP_
#define OVERLAP_GAP_TESTS_ORACLES_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using std::string;

// Border array by trying every border length of every prefix.
inline std::vector<std::size_t> borders(const string& w) {
  std::vector<std::size_t> out;
  for (std::size_t len = 1; len <= w.size(); ++len) {
    const string prefix = w.substr(0, len);
    std::size_t best = 0;
    for (std::size_t b = 1; b < len; ++b) {
      if (prefix.substr(0, b) == prefix.substr(len - b)) best = b;
    }
    out.push_back(best);
  }
  return out;
}

inline std::size_t suffix_prefix_match(const string& u, const string& v) {
  for (std::size_t k = u.size() + 1; k-- > 0;) {
    if (u.substr(u.size() - k) == v.substr(0, k)) return k;
  }
  return 0;
}

// Least n with u x = x' v for some words x, x' of length n. Any witness must
// take x from the end of v and x' from the start of u.
inline std::size_t log_gap(const string& u, const string& v) {
  const std::size_t len = u.size();
  for (std::size_t n = 0; n <= len; ++n) {
    if (u + v.substr(len - n) == u.substr(0, n) + v) return n;
  }
  return len;
}

// Least n with x u = v x' for some words x, x' of length n.
inline std::size_t rog_gap(const string& u, const string& v) {
  const std::size_t len = u.size();
  for (std::size_t n = 0; n <= len; ++n) {
    if (v.substr(0, n) + u == v + u.substr(len - n)) return n;
  }
  return len;
}

inline std::vector<string> rotations(const string& u) {
  std::vector<string> out;
  for (std::size_t k = 0; k < u.size(); ++k) out.push_back(u.substr(k) + u.substr(0, k));
  return out;
}

inline bool conjugate(const string& u, const string& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  for (const auto& r : rotations(u)) {
    if (r == v) return true;
  }
  return false;
}

// Length-n suffix of ...uuu w.
inline string unroll_left(const string& u, const string& w, std::size_t n) {
  string s = w;
  while (s.size() < n) s = u + s;
  return s.substr(s.size() - n);
}

// Length-n prefix of w uuu...
inline string unroll_right(const string& w, const string& u, std::size_t n) {
  string s = w;
  while (s.size() < n) s += u;
  return s.substr(0, n);
}

inline string substitute(string w, std::size_t length, const string& image_a,
                         const string& image_b) {
  while (w.size() < length) {
    string next;
    for (char c : w) next += (c == 'a' ? image_a : image_b);
    w = next;
  }
  return w.substr(0, length);
}

// a -> ab, b -> ba from a.
inline string thue_morse(std::size_t length) { return substitute("a", length, "ab", "ba"); }

// a -> ab, b -> a from a.
inline string fibonacci(std::size_t length) { return substitute("a", length, "ab", "a"); }

inline std::vector<string> all_words(const string& letters, std::size_t length) {
  std::vector<string> out{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<string> next;
    for (const auto& w : out) {
      for (char c : letters) next.push_back(w + c);
    }
    out.swap(next);
  }
  return out;
}

inline string random_word(std::mt19937_64& rng, const string& letters, std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  string w(length, ' ');
  for (auto& c : w) c = letters[pick(rng)];
  return w;
}

}  // namespace oracle

#endif  // OVERLAP_GAP_TESTS_ORACLES_HPP_
