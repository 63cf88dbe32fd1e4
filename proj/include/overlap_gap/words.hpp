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

// Finite-word primitives: border arrays, periods, primitive roots and
// conjugacy. The algorithms accept any random-access range whose letters are
// equality comparable; the rest of the library instantiates them on Word.

#ifndef OVERLAP_GAP_WORDS_HPP_
#define OVERLAP_GAP_WORDS_HPP_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <iterator>
#include <optional>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace overlap_gap {

// One char is one letter.
using Word = std::string;

template <class R>
concept WordLike = std::ranges::random_access_range<R> &&
                   std::ranges::sized_range<R> &&
                   std::equality_comparable<std::ranges::range_value_t<R>>;

// An ordered set of distinct letters.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) {
      throw std::invalid_argument("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (letters_.find(letters_[i], i + 1) != std::string::npos) {
        throw std::invalid_argument(std::string("duplicate letter '") +
                                    letters_[i] + "' in alphabet");
      }
    }
  }

  const std::string& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char operator[](std::size_t i) const { return letters_.at(i); }
  bool contains(char c) const noexcept {
    return letters_.find(c) != std::string::npos;
  }
  bool spells(std::string_view w) const noexcept {
    return std::ranges::all_of(w, [this](char c) { return contains(c); });
  }

 private:
  std::string letters_;
};

// Position i holds the length of the longest proper border of the length-(i+1)
// prefix of w.
template <WordLike W>
std::vector<std::size_t> borders(const W& w) {
  const std::size_t n = std::ranges::size(w);
  const auto a = std::ranges::begin(w);
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && !(a[i] == a[k])) k = border[k - 1];
    if (a[i] == a[k]) ++k;
    border[i] = k;
  }
  return border;
}

namespace detail {

// Runs the prefix automaton of `pattern` over `text`. Calls on_match(end) for
// every occurrence of pattern ending at text position `end` and returns the
// automaton state after the last letter, i.e. the longest suffix of text that
// is a prefix of pattern. Requires a non-empty pattern.
template <class T, class P, class OnMatch>
std::size_t prefix_automaton_scan(const T& text, const P& pattern,
                                  const std::vector<std::size_t>& border,
                                  OnMatch&& on_match) {
  const std::size_t m = std::ranges::size(pattern);
  const auto t = std::ranges::begin(text);
  const auto p = std::ranges::begin(pattern);
  std::size_t k = 0;
  for (std::size_t i = 0, n = std::ranges::size(text); i < n; ++i) {
    while (k > 0 && (k == m || !(t[i] == p[k]))) k = border[k - 1];
    if (t[i] == p[k]) ++k;
    if (k == m) on_match(i + 1);
  }
  return k;
}

}  // namespace detail

// Largest k <= |u| such that the length-k suffix of u equals the length-k
// prefix of v. Linear time.
template <WordLike U, WordLike V>
std::size_t longest_suffix_prefix_match(const U& u, const V& v) {
  const std::size_t len = std::ranges::size(u);
  if (std::ranges::size(v) != len) {
    throw std::invalid_argument("words must have equal length");
  }
  if (len == 0) return 0;
  return detail::prefix_automaton_scan(u, v, borders(v), [](std::size_t) {});
}

// True iff a_i = a_{i+p} wherever both indices are valid.
template <WordLike W>
bool is_p_periodic(const W& w, std::size_t p) {
  if (p == 0) throw std::invalid_argument("period must be positive");
  const std::size_t n = std::ranges::size(w);
  const auto a = std::ranges::begin(w);
  for (std::size_t i = 0; i + p < n; ++i) {
    if (!(a[i] == a[i + p])) return false;
  }
  return true;
}

// Smallest period of a non-empty word.
template <WordLike W>
std::size_t smallest_period(const W& w) {
  const std::size_t n = std::ranges::size(w);
  if (n == 0) throw std::invalid_argument("empty word has no period");
  return n - borders(w).back();
}

template <class W>
struct Power {
  W root;
  std::size_t exponent = 0;

  friend bool operator==(const Power&, const Power&) = default;
};

// w = root^exponent with root primitive.
template <WordLike W>
Power<W> primitive_root(const W& w) {
  const std::size_t n = std::ranges::size(w);
  if (n == 0) throw std::invalid_argument("empty word has no primitive root");
  std::size_t period = smallest_period(w);
  if (n % period != 0) period = n;
  const auto first = std::ranges::begin(w);
  return {W(first, first + static_cast<std::ptrdiff_t>(period)), n / period};
}

template <WordLike W>
bool is_primitive(const W& w) {
  return primitive_root(w).exponent == 1;
}

// u = y z and v = z y.
template <class W>
struct Conjugation {
  W y;
  W z;

  friend bool operator==(const Conjugation&, const Conjugation&) = default;
};

// Witness (y, z) with u = y z, v = z y, y non-empty and |z| minimal, or
// nothing when u and v are not conjugate. Two empty words are conjugate with
// both witness parts empty.
template <WordLike W>
std::optional<Conjugation<W>> is_conjugate(const W& u, const W& v) {
  const std::size_t len = std::ranges::size(u);
  if (std::ranges::size(v) != len) return std::nullopt;
  if (len == 0) return Conjugation<W>{};

  // v = (uu)[s, s+len) for s in [0, len) puts y = u[0, s) and z = u[s, len);
  // s = 0 is the identity rotation with z empty.
  const auto a = std::ranges::begin(u);
  auto doubled = std::views::iota(std::size_t{0}, 2 * len - 1) |
                 std::views::transform([a, len](std::size_t i) {
                   return a[static_cast<std::ptrdiff_t>(i % len)];
                 });
  std::optional<std::size_t> best;
  detail::prefix_automaton_scan(
      doubled, v, borders(v), [&](std::size_t end) {
        const std::size_t start = end - len;
        if (!best || start == 0 || (*best != 0 && start > *best)) {
          best = start;
        }
      });
  if (!best) return std::nullopt;
  const std::size_t cut = *best == 0 ? len : *best;
  return Conjugation<W>{W(a, a + static_cast<std::ptrdiff_t>(cut)),
                        W(a + static_cast<std::ptrdiff_t>(cut), a + static_cast<std::ptrdiff_t>(len))};
}

// Moves the first k letters of w to its end.
inline Word rotate_left(std::string_view w, std::size_t k) {
  if (w.empty()) return {};
  k %= w.size();
  Word out(w.substr(k));
  out.append(w.substr(0, k));
  return out;
}

inline Word reversed(std::string_view w) { return Word(w.rbegin(), w.rend()); }

inline Word power(std::string_view w, std::size_t exponent) {
  Word out;
  out.reserve(w.size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out.append(w);
  return out;
}

}  // namespace overlap_gap

#endif  // OVERLAP_GAP_WORDS_HPP_
