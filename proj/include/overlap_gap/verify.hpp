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

// Property suites over enumerated and seeded random instances. Each check
// returns a PropertyReport; a report passes iff it holds no failures, and
// failures are recorded in instance order so the first one is the smallest
// counterexample under the enumeration.

#ifndef OVERLAP_GAP_VERIFY_HPP_
#define OVERLAP_GAP_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "overlap_gap/infinite.hpp"
#include "overlap_gap/overlap.hpp"
#include "overlap_gap/sequences.hpp"
#include "overlap_gap/words.hpp"

namespace overlap_gap::verify {

inline constexpr std::uint64_t kDefaultSeed = 20150423;
inline constexpr std::size_t kMaxRecordedFailures = 32;

struct Failure {
  std::string input;
  std::string expected;
  std::string actual;
};

struct PropertyReport {
  std::string property;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }

  void fail(std::string input, std::string expected, std::string actual) {
    if (failures.size() < kMaxRecordedFailures) {
      failures.push_back({std::move(input), std::move(expected), std::move(actual)});
    }
  }

  // One JSON-lines record: {property, instances, failures, seed, elapsed_ms}.
  nlohmann::json to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures) {
      fs.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return {{"property", property},
            {"instances", instances},
            {"failures", fs},
            {"seed", seed},
            {"elapsed_ms", elapsed_ms}};
  }
};

struct Pair {
  LeftInfiniteWord left;
  RightInfiniteWord right;

  std::string describe() const { return left.literal() + " " + right.literal(); }
};

struct OneSidedPair {
  LeftInfiniteWord left;
  LeftInfiniteWord right;

  std::string describe() const { return left.literal() + " " + right.literal(); }
};

namespace detail {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline PropertyReport start_report(std::string property, std::uint64_t seed = 0) {
  PropertyReport report;
  report.property = std::move(property);
  report.seed = seed;
  return report;
}

// rog over n = 0..horizon from the naive kernel on freshly sampled words.
inline std::vector<std::size_t> brute_force_rog(const Pair& pair,
                                                std::size_t horizon) {
  const Word left = pair.left.sample(horizon);
  const Word right = pair.right.sample(horizon);
  std::vector<std::size_t> rog(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    rog[n] = rog_gap_naive(std::string_view(left).substr(horizon - n),
                           std::string_view(right).substr(0, n));
  }
  return rog;
}

inline std::string set_string(const std::set<std::size_t>& values) {
  std::string out = "{";
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != values.begin()) out += ",";
    out += std::to_string(*it);
  }
  return out + "}";
}

inline Word random_word(std::mt19937_64& rng, std::string_view letters,
                        std::size_t length) {
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  Word w(length, '\0');
  for (auto& c : w) c = letters[pick(rng)];
  return w;
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <Side S>
InfiniteWord<S> random_periodic(std::mt19937_64& rng, std::string_view letters,
                                std::size_t max_period, std::size_t max_preperiod) {
  Word period = random_word(rng, letters, random_size(rng, 1, max_period));
  Word preperiod = random_word(rng, letters, random_size(rng, 0, max_preperiod));
  return InfiniteWord<S>::periodic(period, preperiod);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instance sources

// All words of the given length, lexicographic in alphabet order.
inline std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length) {
  std::vector<Word> out{Word()};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& w : out) {
      for (char c : alphabet.letters()) next.push_back(w + c);
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    auto ws = words_of_length(alphabet, n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

inline std::vector<Word> primitive_words(const Alphabet& alphabet, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (auto& w : words_of_length(alphabet, n)) {
      if (is_primitive(w)) out.push_back(std::move(w));
    }
  }
  return out;
}

// Every canonical ultimately periodic pair over the alphabet with periods of
// length <= max_period and preperiods of length <= max_preperiod.
inline std::vector<Pair> periodic_pairs(const Alphabet& alphabet,
                                        std::size_t max_period,
                                        std::size_t max_preperiod) {
  const auto periods = primitive_words(alphabet, max_period);
  const auto preperiods = words_up_to(alphabet, max_preperiod);
  std::vector<LeftInfiniteWord> lefts;
  std::vector<RightInfiniteWord> rights;
  for (const auto& u : periods) {
    for (const auto& w : preperiods) {
      if (w.empty() || w.front() != u.front()) lefts.push_back(LeftInfiniteWord::periodic(u, w));
      if (w.empty() || w.back() != u.back()) rights.push_back(RightInfiniteWord::periodic(u, w));
    }
  }
  std::vector<Pair> out;
  out.reserve(lefts.size() * rights.size());
  for (const auto& l : lefts) {
    for (const auto& r : rights) out.push_back({l, r});
  }
  return out;
}

// Canonical pairs with conjugate periods, over the alphabets {a}, {a,b},
// {a,b,c}, ... in turn; each alphabet contributes only the pairs that use its
// last letter, so no pair appears twice.
inline std::vector<Pair> conjugate_periodic_pairs(std::size_t alphabet_size = 3,
                                                  std::size_t max_period = 4,
                                                  std::size_t max_preperiod = 3) {
  const std::string all_letters = "abcdefghijklmnopqrstuvwxyz";
  if (alphabet_size == 0 || alphabet_size > all_letters.size()) {
    throw std::invalid_argument("alphabet size out of range");
  }
  std::vector<Pair> out;
  for (std::size_t s = 1; s <= alphabet_size; ++s) {
    const Alphabet alphabet(std::string_view(all_letters).substr(0, s));
    const char newest = alphabet[s - 1];
    const auto preperiods = words_up_to(alphabet, max_preperiod);
    for (const auto& u : primitive_words(alphabet, max_period)) {
      std::set<Word> rotations;
      for (std::size_t k = 0; k < u.size(); ++k) rotations.insert(rotate_left(u, k));
      for (const auto& w1 : preperiods) {
        if (!w1.empty() && w1.front() == u.front()) continue;
        for (const auto& v : rotations) {
          for (const auto& w2 : preperiods) {
            if (!w2.empty() && w2.back() == v.back()) continue;
            const std::string used = u + w1 + w2;
            if (used.find(newest) == std::string::npos) continue;
            out.push_back({LeftInfiniteWord::periodic(u, w1),
                           RightInfiniteWord::periodic(v, w2)});
          }
        }
      }
    }
  }
  return out;
}

// The two worked pairs: ^inf(baa) with (aab)^inf, and ^inf(bbaa)cab with
// (abba)^inf.
inline std::vector<Pair> worked_examples() {
  return {{LeftInfiniteWord::periodic("baa"), RightInfiniteWord::periodic("aab")},
          {LeftInfiniteWord::periodic("bbaa", "cab"), RightInfiniteWord::periodic("abba")}};
}

// Seeded mix of generator words and random ultimately periodic words.
inline std::vector<Pair> random_pairs(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto left = [&] {
    switch (detail::random_size(rng, 0, 3)) {
      case 0:
        return LeftInfiniteWord::generated(Generator::thue_morse);
      case 1:
        return LeftInfiniteWord::generated(Generator::fibonacci);
      default:
        return detail::random_periodic<Side::left>(rng, "abc", 4, 4);
    }
  };
  auto right = [&] {
    switch (detail::random_size(rng, 0, 3)) {
      case 0:
        return RightInfiniteWord::generated(Generator::thue_morse);
      case 1:
        return RightInfiniteWord::generated(Generator::fibonacci);
      default:
        return detail::random_periodic<Side::right>(rng, "abc", 4, 4);
    }
  };
  std::vector<Pair> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto l = left();
    out.push_back({std::move(l), right()});
  }
  return out;
}

// rho = lambda w with |w| <= max_extension. The extension itself is returned
// alongside each pair.
inline std::vector<std::pair<OneSidedPair, Word>> extension_pairs(
    std::size_t count, std::uint64_t seed, std::size_t max_extension = 5) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<OneSidedPair, Word>> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto lambda = detail::random_periodic<Side::left>(rng, "abc", 4, 3);
    Word w = detail::random_word(rng, "abc", detail::random_size(rng, 0, max_extension));
    out.push_back({{lambda, extend(lambda, w)}, w});
  }
  return out;
}

// Pairs where neither word extends the other: the left preperiod contains a
// c the right word lacks and the right preperiod a d the left word lacks.
// Periods are conjugate for even indices and random over {a,b} otherwise.
inline std::vector<OneSidedPair> non_extension_pairs(std::size_t count,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OneSidedPair> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Word u = detail::random_word(rng, "ab", detail::random_size(rng, 1, 4));
    const Word v = i % 2 == 0
                       ? rotate_left(u, detail::random_size(rng, 0, u.size() - 1))
                       : detail::random_word(rng, "ab", detail::random_size(rng, 1, 4));
    const Word w1 = "c" + detail::random_word(rng, "ab", detail::random_size(rng, 0, 3));
    const Word w2 = "d" + detail::random_word(rng, "ab", detail::random_size(rng, 0, 3));
    out.push_back({LeftInfiniteWord::periodic(u, w1), LeftInfiniteWord::periodic(v, w2)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

// log(n+1) in {0, log(n)+1} and rog(n+1) >= rog(n) - 1 for n < horizon.
inline PropertyReport check_step_lemma(const std::vector<Pair>& pairs,
                                       std::size_t horizon,
                                       std::string name = "step-lemma",
                                       std::uint64_t seed = 0) {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name), seed);
  for (const auto& pair : pairs) {
    ++report.instances;
    const auto seq = gap_sequence(pair.left, pair.right, horizon);
    for (std::size_t n = 0; n < horizon; ++n) {
      const auto& cur = seq.records[n];
      const auto& next = seq.records[n + 1];
      if (next.log != 0 && next.log != cur.log + 1) {
        report.fail(pair.describe() + " n=" + std::to_string(n + 1),
                    "log in {0," + std::to_string(cur.log + 1) + "}",
                    "log=" + std::to_string(next.log));
      }
      if (next.rog + 1 < cur.rog) {
        report.fail(pair.describe() + " n=" + std::to_string(n + 1),
                    "rog>=" + std::to_string(cur.rog - 1),
                    "rog=" + std::to_string(next.rog));
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// Last n examined by the closed-form check with `extra_blocks` blocks past k0.
inline std::size_t closed_form_horizon(const ClosedFormParams& cf,
                                       std::size_t extra_blocks) {
  return cf.phase_start + 1 + cf.period * (cf.first_block + extra_blocks) + cf.period - 1;
}

// rog(n) <= M for n <= horizon; by default the horizon reaches three blocks
// past the closed-form threshold.
inline PropertyReport check_rog_bound(const std::vector<Pair>& pairs,
                                      std::optional<std::size_t> horizon = std::nullopt,
                                      std::string name = "rog-bound") {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name));
  for (const auto& pair : pairs) {
    ++report.instances;
    const auto cf = closed_form_params(pair.left, pair.right);
    const std::size_t h = horizon.value_or(closed_form_horizon(cf, 3));
    const auto rog = detail::brute_force_rog(pair, h);
    for (std::size_t n = 0; n <= h; ++n) {
      if (rog[n] > cf.rog_bound) {
        report.fail(pair.describe() + " n=" + std::to_string(n),
                    "rog<=" + std::to_string(cf.rog_bound),
                    "rog=" + std::to_string(rog[n]));
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// rog(mbar+1+j+pk) = M-j for k0 <= k <= k0+extra_blocks, against the naive
// kernel; closed_form_rog must agree.
inline PropertyReport check_closed_form(const std::vector<Pair>& pairs,
                                        std::size_t extra_blocks = 3,
                                        std::string name = "closed-form") {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name));
  for (const auto& pair : pairs) {
    ++report.instances;
    const auto cf = closed_form_params(pair.left, pair.right);
    const auto rog = detail::brute_force_rog(pair, closed_form_horizon(cf, extra_blocks));
    for (std::size_t k = cf.first_block; k <= cf.first_block + extra_blocks; ++k) {
      for (std::size_t j = 0; j < cf.period; ++j) {
        const std::size_t n = cf.phase_start + 1 + j + cf.period * k;
        const std::size_t expected = cf.rog_bound - j;
        const auto closed = closed_form_rog(cf, n);
        if (rog[n] != expected || closed != expected) {
          report.fail(pair.describe() + " n=" + std::to_string(n),
                      "rog=" + std::to_string(expected),
                      "brute=" + std::to_string(rog[n]) + " closed=" +
                          (closed ? std::to_string(*closed) : std::string("none")));
        }
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// On exactly computed sets OG and ROG are both finite, max ROG <= 2 max OG
// when max OG >= 1 and ROG = {0} otherwise. The sets are also compared with
// brute-force images over twice their scan horizon.
inline PropertyReport check_og_rog_equifiniteness(const std::vector<Pair>& pairs,
                                                  std::string name = "og-rog-equifinite") {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name));
  for (const auto& pair : pairs) {
    ++report.instances;
    GapSets sets;
    try {
      sets = exact_gap_sets(pair.left, pair.right);
    } catch (const std::exception& e) {
      report.fail(pair.describe(), "finite ROG and OG", e.what());
      continue;
    }
    const std::size_t max_og = *sets.og.rbegin();
    const std::size_t max_rog = *sets.rog.rbegin();
    if (max_og >= 1 ? max_rog > 2 * max_og : max_rog != 0) {
      report.fail(pair.describe(), "max ROG <= 2 max OG",
                  "ROG=" + detail::set_string(sets.rog) + " OG=" + detail::set_string(sets.og));
    }
    const auto seq = gap_sequence(pair.left, pair.right, 2 * sets.horizon);
    std::set<std::size_t> seen_log, seen_rog, seen_og;
    for (const auto& r : seq.records) {
      seen_log.insert(r.log);
      seen_rog.insert(r.rog);
      seen_og.insert(r.og);
    }
    if (seen_rog != sets.rog || seen_og != sets.og || (sets.log && seen_log != *sets.log)) {
      report.fail(pair.describe(), "ROG=" + detail::set_string(sets.rog) + " OG=" + detail::set_string(sets.og),
                  "seen ROG=" + detail::set_string(seen_rog) + " OG=" + detail::set_string(seen_og));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// lambda = ^inf(a) b a^i and rho = a^i b a^inf: rog(2i+1) = 0 while the
// longer preperiod has length i+1.
inline PropertyReport check_threshold_counterexample(const std::vector<std::size_t>& exponents,
                                                     std::string name = "threshold") {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name));
  for (std::size_t i : exponents) {
    ++report.instances;
    const Word tail = power("a", i);
    const Pair pair{LeftInfiniteWord::periodic("a", "b" + tail),
                    RightInfiniteWord::periodic("a", tail + "b")};
    const auto cf = closed_form_params(pair.left, pair.right);
    const auto rog = detail::brute_force_rog(pair, 2 * i + 1);
    if (rog[2 * i + 1] != 0 || cf.max_preperiod != i + 1) {
      report.fail(pair.describe(), "rog(" + std::to_string(2 * i + 1) + ")=0 m=" + std::to_string(i + 1),
                  "rog=" + std::to_string(rog[2 * i + 1]) + " m=" + std::to_string(cf.max_preperiod));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// For rho = lambda w: the verdict is finite and og(n) <= |w| for n <= horizon.
inline PropertyReport check_one_sided_extensions(
    const std::vector<std::pair<OneSidedPair, Word>>& pairs,
    std::string name = "one-sided/extensions", std::uint64_t seed = 0,
    std::size_t horizon = 128) {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name), seed);
  for (const auto& [pair, w] : pairs) {
    ++report.instances;
    const auto verdict = decide_og_finite_one_sided(pair.left, pair.right);
    if (!verdict.decided || !verdict.finite) {
      report.fail(pair.describe(), "finite", verdict.decided ? "infinite" : "undecided");
      continue;
    }
    const auto seq = one_sided_gap_sequence(pair.left, pair.right, horizon);
    if (seq.max_og(horizon) > w.size()) {
      report.fail(pair.describe(), "og<=" + std::to_string(w.size()),
                  "max og=" + std::to_string(seq.max_og(horizon)));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// Neither word extends the other: the verdict is infinite and max og grows
// from short_horizon to long_horizon.
inline PropertyReport check_one_sided_non_extensions(const std::vector<OneSidedPair>& pairs,
                                                     std::string name = "one-sided/non-extensions",
                                                     std::uint64_t seed = 0,
                                                     std::size_t short_horizon = 64,
                                                     std::size_t long_horizon = 256) {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name), seed);
  for (const auto& pair : pairs) {
    ++report.instances;
    const auto verdict = decide_og_finite_one_sided(pair.left, pair.right);
    if (!verdict.decided || verdict.finite) {
      report.fail(pair.describe(), "infinite", verdict.decided ? "finite" : "undecided");
      continue;
    }
    const auto seq = one_sided_gap_sequence(pair.left, pair.right, long_horizon);
    if (seq.max_og(long_horizon) <= seq.max_og(short_horizon)) {
      report.fail(pair.describe(), "og grows",
                  "max og " + std::to_string(seq.max_og(short_horizon)) + " then " +
                      std::to_string(seq.max_og(long_horizon)));
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// Horizon N = 4(M+p) used by growth checks; for non-conjugate periods p is
// the longer period.
inline std::size_t growth_horizon(const Pair& pair) {
  const std::size_t p = std::max(pair.left.period().size(), pair.right.period().size());
  const std::size_t m = std::max(pair.left.preperiod().size(), pair.right.preperiod().size());
  return 4 * (m + p - 1 + p);
}

// Verdicts match a brute-force rotation test of the periods; witnesses
// reconstruct both words letter by letter; infinite verdicts show og growth
// between N and 4N.
inline PropertyReport check_decision_soundness(const std::vector<Pair>& pairs,
                                               std::string name = "decision",
                                               std::uint64_t seed = 0) {
  detail::Stopwatch clock;
  PropertyReport report = detail::start_report(std::move(name), seed);
  for (const auto& pair : pairs) {
    ++report.instances;
    const auto verdict = decide_og_finite(pair.left, pair.right);
    const Word& u = pair.left.period();
    const Word& v = pair.right.period();
    bool rotation = false;
    for (std::size_t k = 0; k < u.size() && u.size() == v.size(); ++k) {
      rotation |= (u.substr(k) + u.substr(0, k) == v);
    }
    if (!verdict.decided || verdict.finite != rotation) {
      report.fail(pair.describe(), rotation ? "finite" : "infinite",
                  verdict.finite ? "finite" : "infinite");
      continue;
    }
    if (verdict.finite) {
      const auto& w = *verdict.witness;
      const std::size_t depth = 2 * (w.period.size() + w.left_preperiod.size() +
                                     w.right_preperiod.size());
      Word left, right = w.right_preperiod;
      while (left.size() < depth) left = w.period + left;
      left += w.left_preperiod;
      while (right.size() < depth) right += w.period;
      left = left.substr(left.size() - depth);
      right.resize(depth);
      if (left != pair.left.sample(depth) || right != pair.right.sample(depth)) {
        report.fail(pair.describe(), "witness reproduces both words",
                    "(" + w.period + ")~" + w.left_preperiod + " " + w.right_preperiod +
                        "~(" + w.period + ")");
      }
    } else {
      const std::size_t n = growth_horizon(pair);
      const auto seq = gap_sequence(pair.left, pair.right, 4 * n);
      if (seq.max_og(4 * n) <= seq.max_og(n)) {
        report.fail(pair.describe(), "og grows",
                    "max og " + std::to_string(seq.max_og(n)) + " then " +
                        std::to_string(seq.max_og(4 * n)));
      }
    }
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

// Seeded sample of `count` canonical ultimately periodic pairs over {a,b}
// with periods of length <= 3 and preperiods of length <= 2.
inline std::vector<Pair> sampled_periodic_pairs(std::size_t count, std::uint64_t seed) {
  const auto all = periodic_pairs(Alphabet("ab"), 3, 2);
  std::vector<Pair> out;
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(out), count, rng);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "all", "step", "bound", "closed-form", "equifinite", "one-sided", "threshold", "decision"};
  return names;
}

inline std::vector<PropertyReport> run_suite(std::string_view suite,
                                             std::uint64_t seed = kDefaultSeed) {
  if (std::ranges::find(suite_names(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  }
  const bool all = suite == "all";
  std::vector<PropertyReport> reports;
  std::vector<Pair> exhaustive;
  auto family = [&]() -> const std::vector<Pair>& {
    if (exhaustive.empty()) exhaustive = conjugate_periodic_pairs();
    return exhaustive;
  };
  if (all || suite == "step") {
    reports.push_back(check_step_lemma(worked_examples(), 100, "step-lemma/examples"));
    reports.push_back(check_step_lemma(random_pairs(100, seed), 128, "step-lemma/random", seed));
  }
  if (all || suite == "bound") {
    reports.push_back(check_rog_bound(worked_examples(), 100, "rog-bound/examples"));
    reports.push_back(check_rog_bound(family(), std::nullopt, "rog-bound/exhaustive"));
  }
  if (all || suite == "closed-form") {
    reports.push_back(check_closed_form(worked_examples(), 3, "closed-form/examples"));
    reports.push_back(check_closed_form(family(), 3, "closed-form/exhaustive"));
  }
  if (all || suite == "equifinite") {
    reports.push_back(check_og_rog_equifiniteness(worked_examples(), "og-rog-equifinite/examples"));
    reports.push_back(check_og_rog_equifiniteness(family(), "og-rog-equifinite/exhaustive"));
  }
  if (all || suite == "threshold") {
    reports.push_back(check_threshold_counterexample({1, 2, 3, 4, 5, 6, 7, 8}));
  }
  if (all || suite == "one-sided") {
    reports.push_back(check_one_sided_extensions(extension_pairs(50, seed), "one-sided/extensions", seed));
    reports.push_back(check_one_sided_non_extensions(non_extension_pairs(50, seed),
                                                     "one-sided/non-extensions", seed));
  }
  if (all || suite == "decision") {
    reports.push_back(check_decision_soundness(sampled_periodic_pairs(200, seed), "decision", seed));
  }
  return reports;
}

}  // namespace overlap_gap::verify

#endif  // OVERLAP_GAP_VERIFY_HPP_
