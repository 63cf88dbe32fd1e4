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

#include "overlap_gap/overlap.hpp"

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace overlap_gap {
namespace {

TEST(Gaps, WorkedExamples) {
  EXPECT_EQ(log_gap(Word("baa"), Word("aab")), 1u);
  EXPECT_EQ(rog_gap(Word("baa"), Word("aab")), 2u);
  EXPECT_EQ(og_gap(Word("baa"), Word("aab")), 1u);
  EXPECT_EQ(log_gap(Word("baacab"), Word("abbaab")), 4u);
  EXPECT_EQ(rog_gap(Word("baacab"), Word("abbaab")), 5u);
  EXPECT_EQ(og_gap(Word("baacab"), Word("abbaab")), 4u);
}

TEST(Gaps, IdenticalAndEmptyWords) {
  EXPECT_EQ(log_gap(Word("abcab"), Word("abcab")), 0u);
  EXPECT_EQ(og_gap(Word("abcab"), Word("abcab")), 0u);
  EXPECT_EQ(rog_gap(Word(), Word()), 0u);
  EXPECT_EQ(gap_record_linear(Word(), Word()), (GapRecord{0, 0, 0, 0}));
  EXPECT_EQ(gap_record_naive(Word(), Word()), (GapRecord{0, 0, 0, 0}));
}

TEST(Gaps, UnequalLengthsAreAnError) {
  EXPECT_THROW(log_gap(Word("ab"), Word("a")), std::invalid_argument);
  EXPECT_THROW(rog_gap(Word("ab"), Word("a")), std::invalid_argument);
  EXPECT_THROW(og_gap(Word("ab"), Word("a")), std::invalid_argument);
  EXPECT_THROW(gap_record_naive(Word("ab"), Word("a")), std::invalid_argument);
  EXPECT_THROW(gap_record_linear(Word("ab"), Word("a")), std::invalid_argument);
}

TEST(Kernels, BothGiveWorkedExampleRecord) {
  const GapRecord expected{3, 1, 2, 1};
  EXPECT_EQ(gap_record_naive(Word("baa"), Word("aab")), expected);
  EXPECT_EQ(gap_record_linear(Word("baa"), Word("aab")), expected);
}

// Exhaustive over {a,b}^L for L <= 10: both kernels match the definitional
// oracle, gaps vanish exactly on equal words, rog is log of the reversed pair
// and of the swapped pair, and 0 <= gap <= L.
TEST(Kernels, ExhaustiveBinaryUpTo10) {
  for (std::size_t len = 0; len <= 10; ++len) {
    const auto words = oracle::all_words("ab", len);
    for (const auto& u : words) {
      const auto ru = reversed(u);
      for (const auto& v : words) {
        const auto naive = gap_record_naive(u, v);
        const auto linear = gap_record_linear(u, v);
        ASSERT_EQ(naive, linear) << u << " " << v;
        if (len <= 7) {
          ASSERT_EQ(linear.log, oracle::log_gap(u, v)) << u << " " << v;
          ASSERT_EQ(linear.rog, oracle::rog_gap(u, v)) << u << " " << v;
        }
        ASSERT_EQ(linear.og, std::min(linear.log, linear.rog));
        ASSERT_EQ(linear.log == 0, u == v);
        ASSERT_EQ(linear.rog == 0, u == v);
        ASSERT_LE(linear.log, len);
        ASSERT_LE(linear.rog, len);
        ASSERT_EQ(linear.rog, log_gap(ru, reversed(v))) << u << " " << v;
        ASSERT_EQ(linear.rog, log_gap(v, u)) << u << " " << v;
      }
    }
  }
}

TEST(Kernels, AgreeOnRandomPairs) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> len(0, 4096);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = len(rng);
    const auto u = oracle::random_word(rng, i % 3 == 0 ? "a" : "ab", n);
    auto v = oracle::random_word(rng, "ab", n);
    if (i % 2 == 0 && n > 0) {
      const std::size_t k = len(rng) % (n + 1);
      v = u.substr(n - k) + v.substr(0, n - k);
    }
    ASSERT_EQ(gap_record_naive(u, v), gap_record_linear(u, v)) << "n=" << n;
  }
}

TEST(Kernels, AcceptOpaqueTokens) {
  const std::vector<int> u{3, 1, 1};
  const std::vector<int> v{1, 1, 3};
  EXPECT_EQ(gap_record_linear(u, v), (GapRecord{3, 1, 2, 1}));
  EXPECT_EQ(gap_record_naive(u, v), (GapRecord{3, 1, 2, 1}));
}

}  // namespace
}  // namespace overlap_gap
