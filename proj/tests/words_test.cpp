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

#include "overlap_gap/words.hpp"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace overlap_gap {
namespace {

using Sizes = std::vector<std::size_t>;

TEST(Alphabet, RejectsEmptyAndDuplicates) {
  EXPECT_THROW(Alphabet(""), std::invalid_argument);
  EXPECT_THROW(Alphabet("aba"), std::invalid_argument);
  const Alphabet ab("ab");
  EXPECT_EQ(ab.size(), 2u);
  EXPECT_TRUE(ab.spells("abba"));
  EXPECT_FALSE(ab.spells("abc"));
}

TEST(PrimitiveRoot, Examples) {
  EXPECT_EQ(primitive_root(Word("abab")), (Power<Word>{"ab", 2}));
  EXPECT_EQ(primitive_root(Word("aab")), (Power<Word>{"aab", 1}));
  EXPECT_EQ(primitive_root(Word("aaaa")), (Power<Word>{"a", 4}));
  EXPECT_EQ(primitive_root(Word("abaab")), (Power<Word>{"abaab", 1}));
}

TEST(PrimitiveRoot, EmptyWordIsAnError) {
  try {
    primitive_root(Word());
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "empty word has no primitive root");
  }
}

TEST(PrimitiveRoot, ReconstructsEveryWordExhaustively) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& w : oracle::all_words("ab", len)) {
      const auto [root, exponent] = primitive_root(w);
      ASSERT_EQ(power(root, exponent), w);
      // Primitive: no proper rotation equals the root itself.
      const auto rots = oracle::rotations(root);
      ASSERT_EQ(std::count(rots.begin(), rots.end(), root), 1) << w;
    }
  }
}

TEST(PrimitiveRoot, AcceptsOpaqueTokens) {
  const std::vector<int> w{7, -1, 7, -1, 7, -1};
  const auto p = primitive_root(w);
  EXPECT_EQ(p.root, (std::vector<int>{7, -1}));
  EXPECT_EQ(p.exponent, 3u);
}

TEST(IsConjugate, Examples) {
  EXPECT_EQ(is_conjugate(Word("baa"), Word("aab")), (Conjugation<Word>{"b", "aa"}));
  EXPECT_EQ(is_conjugate(Word("ab"), Word("ab")), (Conjugation<Word>{"ab", ""}));
  EXPECT_EQ(is_conjugate(Word("ab"), Word("ba")), (Conjugation<Word>{"a", "b"}));
  EXPECT_FALSE(is_conjugate(Word("ab"), Word("bb")));
  EXPECT_FALSE(is_conjugate(Word("ab"), Word("abc")));
}

TEST(IsConjugate, EmptyWordsAreConjugate) {
  EXPECT_EQ(is_conjugate(Word(), Word()), (Conjugation<Word>{"", ""}));
}

TEST(IsConjugate, NonPrimitiveUsesShortestZ) {
  // abab = (ab)(ab) = y z with z empty, and baba = (b)(aba)... the minimal z
  // for baba is "b".
  EXPECT_EQ(is_conjugate(Word("abab"), Word("abab")), (Conjugation<Word>{"abab", ""}));
  EXPECT_EQ(is_conjugate(Word("abab"), Word("baba")), (Conjugation<Word>{"aba", "b"}));
}

TEST(IsConjugate, AgreesWithRotationsAndFactorOfSquare) {
  for (std::size_t len = 0; len <= 6; ++len) {
    const auto words = oracle::all_words("ab", len);
    for (const auto& u : words) {
      for (const auto& v : words) {
        const auto witness = is_conjugate(u, v);
        ASSERT_EQ(witness.has_value(), oracle::conjugate(u, v)) << u << " " << v;
        ASSERT_EQ(witness.has_value(), (u + u).find(v) != std::string::npos) << u << " " << v;
        if (!witness || len == 0) continue;
        ASSERT_EQ(witness->y + witness->z, u);
        ASSERT_EQ(witness->z + witness->y, v);
        ASSERT_FALSE(witness->y.empty());
        // No shorter z works.
        for (std::size_t t = 0; t < witness->z.size(); ++t) {
          ASSERT_NE(u.substr(len - t) + u.substr(0, len - t), v);
        }
      }
    }
  }
}

TEST(LongestSuffixPrefixMatch, Examples) {
  EXPECT_EQ(longest_suffix_prefix_match(Word("baa"), Word("aab")), 2u);
  EXPECT_EQ(longest_suffix_prefix_match(Word("abcab"), Word("abcab")), 5u);
  EXPECT_EQ(longest_suffix_prefix_match(Word("ab"), Word("ba")), 1u);
  EXPECT_EQ(longest_suffix_prefix_match(Word(), Word()), 0u);
  EXPECT_THROW(longest_suffix_prefix_match(Word("ab"), Word("a")), std::invalid_argument);
}

TEST(LongestSuffixPrefixMatch, ExhaustiveBinaryUpTo12) {
  for (std::size_t len = 0; len <= 12; ++len) {
    const auto words = oracle::all_words("ab", len);
    for (const auto& u : words) {
      for (const auto& v : words) {
        ASSERT_EQ(longest_suffix_prefix_match(u, v), oracle::suffix_prefix_match(u, v))
            << u << " " << v;
      }
    }
  }
}

TEST(LongestSuffixPrefixMatch, RandomPairsUpTo512) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(0, 512);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = len(rng);
    const auto u = oracle::random_word(rng, "ab", n);
    // Half of the pairs share a long overlap.
    auto v = oracle::random_word(rng, "ab", n);
    if (i % 2 == 0 && n > 0) {
      const std::size_t k = len(rng) % (n + 1);
      v = u.substr(n - k) + v.substr(0, n - k);
    }
    ASSERT_EQ(longest_suffix_prefix_match(u, v), oracle::suffix_prefix_match(u, v));
  }
}

TEST(Borders, Examples) {
  EXPECT_EQ(borders(Word("aabaa")), (Sizes{0, 1, 0, 1, 2}));
  EXPECT_EQ(borders(Word("abcd")), (Sizes{0, 0, 0, 0}));
  EXPECT_EQ(borders(Word("aaaa")), (Sizes{0, 1, 2, 3}));
  EXPECT_TRUE(borders(Word()).empty());
}

TEST(Borders, MatchesBruteForce) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& w : oracle::all_words("ab", len)) {
      ASSERT_EQ(borders(w), oracle::borders(w)) << w;
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto w = oracle::random_word(rng, "abc", 40);
    ASSERT_EQ(borders(w), oracle::borders(w)) << w;
  }
}

TEST(IsPPeriodic, Examples) {
  EXPECT_TRUE(is_p_periodic(Word("abab"), 2));
  EXPECT_FALSE(is_p_periodic(Word("abab"), 3));
  EXPECT_TRUE(is_p_periodic(Word("ab"), 5));
  EXPECT_THROW(is_p_periodic(Word("ab"), 0), std::invalid_argument);
}

// w has period p iff it is a factor of (w[0,p))^inf, i.e. a prefix of the
// periodic word sampled to |w| + p.
TEST(IsPPeriodic, MatchesEmbeddingIntoPeriodicWord) {
  for (std::size_t len = 1; len <= 9; ++len) {
    for (const auto& w : oracle::all_words("ab", len)) {
      for (std::size_t p = 1; p <= len + 1; ++p) {
        const auto block = w.substr(0, std::min(p, len));
        std::string periodic;
        while (periodic.size() < len + p) periodic += block;
        const bool factor = block.size() == p ? periodic.find(w) != std::string::npos : true;
        ASSERT_EQ(is_p_periodic(w, p), factor) << w << " p=" << p;
      }
    }
  }
}

}  // namespace
}  // namespace overlap_gap
