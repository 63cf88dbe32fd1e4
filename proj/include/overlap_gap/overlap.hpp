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

// Overlap gaps between two words u, v of equal length L:
//
//   log(u, v) = least n with u x = x' v for some x, x' of length n
//   rog(u, v) = least n with x u = v x' for some x, x' of length n
//   og(u, v)  = min(log, rog)
//
// so log is L minus the longest suffix of u that is a prefix of v, and rog is
// L minus the longest prefix of u that is a suffix of v. Each gap has a naive
// kernel that tries every overlap length and a linear one driven by a border
// array.

#ifndef OVERLAP_GAP_OVERLAP_HPP_
#define OVERLAP_GAP_OVERLAP_HPP_

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <ranges>
#include <stdexcept>

#include "overlap_gap/words.hpp"

namespace overlap_gap {

struct GapRecord {
  std::size_t n = 0;
  std::size_t log = 0;
  std::size_t rog = 0;
  std::size_t og = 0;

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
  friend std::ostream& operator<<(std::ostream& os, const GapRecord& r) {
    return os << "(n=" << r.n << ", log=" << r.log << ", rog=" << r.rog
              << ", og=" << r.og << ")";
  }
};

namespace detail {

template <class U, class V>
std::size_t checked_length(const U& u, const V& v) {
  const std::size_t len = std::ranges::size(u);
  if (std::ranges::size(v) != len) {
    throw std::invalid_argument("overlap gaps need words of equal length");
  }
  return len;
}

// Longest k with suffix_k(u) == prefix_k(v), trying k = L, L-1, ..., 0.
template <class U, class V>
std::size_t naive_suffix_prefix_overlap(const U& u, const V& v) {
  const std::size_t len = checked_length(u, v);
  const auto a = std::ranges::begin(u);
  const auto b = std::ranges::begin(v);
  for (std::size_t k = len; k > 0; --k) {
    if (std::equal(a + static_cast<std::ptrdiff_t>(len - k),
                   a + static_cast<std::ptrdiff_t>(len), b)) {
      return k;
    }
  }
  return 0;
}

}  // namespace detail

template <WordLike U, WordLike V>
std::size_t log_gap(const U& u, const V& v) {
  const std::size_t len = detail::checked_length(u, v);
  return len - longest_suffix_prefix_match(u, v);
}

template <WordLike U, WordLike V>
std::size_t rog_gap(const U& u, const V& v) {
  const std::size_t len = detail::checked_length(u, v);
  return len - longest_suffix_prefix_match(v, u);
}

template <WordLike U, WordLike V>
std::size_t og_gap(const U& u, const V& v) {
  return std::min(log_gap(u, v), rog_gap(u, v));
}

template <WordLike U, WordLike V>
std::size_t log_gap_naive(const U& u, const V& v) {
  return std::ranges::size(u) - detail::naive_suffix_prefix_overlap(u, v);
}

template <WordLike U, WordLike V>
std::size_t rog_gap_naive(const U& u, const V& v) {
  return std::ranges::size(u) - detail::naive_suffix_prefix_overlap(v, u);
}

template <WordLike U, WordLike V>
GapRecord gap_record_naive(const U& u, const V& v) {
  GapRecord r;
  r.n = detail::checked_length(u, v);
  r.log = log_gap_naive(u, v);
  r.rog = rog_gap_naive(u, v);
  r.og = std::min(r.log, r.rog);
  return r;
}

template <WordLike U, WordLike V>
GapRecord gap_record_linear(const U& u, const V& v) {
  GapRecord r;
  r.n = detail::checked_length(u, v);
  r.log = log_gap(u, v);
  r.rog = rog_gap(u, v);
  r.og = std::min(r.log, r.rog);
  return r;
}

}  // namespace overlap_gap

#endif  // OVERLAP_GAP_OVERLAP_HPP_
