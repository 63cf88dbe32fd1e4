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

// Gap sequences n -> (log, rog, og) of lambda_n and rho_n, where lambda_n is
// the length-n suffix of a left-infinite word and rho_n the length-n prefix of
// a right-infinite word (or, one-sided, the length-n suffix of a second
// left-infinite word).
//
// For ultimately periodic lambda = ...uuu w1 and rho = w2 vvv... with
// conjugate periods u = y z, v = z y of length p, write m' and m for the
// shorter and longer preperiod length and M = m + p - 1. Then rog never
// exceeds M, and past a threshold it runs through M, M-1, ..., M-p+1 with
// period p:
//
//   rog(mbar + 1 + j + p k) = M - j    for 0 <= j < p and k >= k0,
//
// where mbar is the integer in [M, M+p-1] congruent to m' + |z| mod p,
// mbar = m' + |z| + d p, and k0 is the least positive k with
// |z| + (d + k) p > M. This is what makes the gap images computable exactly.

#ifndef OVERLAP_GAP_SEQUENCES_HPP_
#define OVERLAP_GAP_SEQUENCES_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "overlap_gap/infinite.hpp"
#include "overlap_gap/overlap.hpp"
#include "overlap_gap/words.hpp"

namespace overlap_gap {

struct GapSequence {
  std::string left;
  std::string right;
  bool one_sided = false;
  std::vector<GapRecord> records;  // records[n] for n = 0..horizon

  std::size_t horizon() const { return records.empty() ? 0 : records.size() - 1; }

  std::size_t max_og(std::size_t upto) const {
    std::size_t best = 0;
    for (std::size_t n = 0; n <= upto && n < records.size(); ++n) {
      best = std::max(best, records[n].og);
    }
    return best;
  }
};

namespace detail {

// Records for n = 0..horizon, where the n-th pair is
// (last n letters of left_source, n letters of right_source ending or
// starting at the boundary).
inline GapSequence tabulate(std::string_view left_source,
                            std::string_view right_source,
                            bool right_is_suffix, std::size_t horizon) {
  GapSequence seq;
  seq.records.reserve(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) {
    const auto lambda_n = left_source.substr(horizon - n);
    const auto rho_n = right_is_suffix ? right_source.substr(horizon - n)
                                       : right_source.substr(0, n);
    seq.records.push_back(gap_record_linear(lambda_n, rho_n));
  }
  return seq;
}

}  // namespace detail

inline GapSequence gap_sequence(const LeftInfiniteWord& lambda,
                                const RightInfiniteWord& rho,
                                std::size_t horizon) {
  GapSequence seq = detail::tabulate(lambda.sample(horizon),
                                     rho.sample(horizon), false, horizon);
  seq.left = lambda.literal();
  seq.right = rho.literal();
  return seq;
}

// Both words are left-infinite; rho_n is the length-n suffix of rho.
inline GapSequence one_sided_gap_sequence(const LeftInfiniteWord& lambda,
                                          const LeftInfiniteWord& rho,
                                          std::size_t horizon) {
  GapSequence seq = detail::tabulate(lambda.sample(horizon),
                                     rho.sample(horizon), true, horizon);
  seq.left = lambda.literal();
  seq.right = rho.literal();
  seq.one_sided = true;
  return seq;
}

// Closed-form apparatus of a conjugate-period ultimately periodic pair. The
// construction assumes the left preperiod is at least as long as the right
// one. When it is shorter, `swapped` is set and every field describes the
// mirrored pair (mirror(rho), mirror(lambda)), which has the same rog
// function.
struct ClosedFormParams {
  Word left_period;      // u
  Word right_period;     // v
  Conjugation<Word> conjugation;  // u = y z, v = z y
  std::size_t period = 0;         // p
  Word left_preperiod;   // w1
  Word right_preperiod;  // w2
  std::size_t min_preperiod = 0;  // m'
  std::size_t max_preperiod = 0;  // m
  std::size_t rog_bound = 0;      // M = m + p - 1
  std::size_t phase_start = 0;    // mbar
  std::size_t phase_periods = 0;  // d, with mbar = m' + |z| + d p
  Word aligned_prefix;            // prefix of rho of length mbar
  std::size_t first_block = 0;    // k0
  bool swapped = false;

  // Least n from which the closed form applies.
  std::size_t periodic_from() const {
    return phase_start + 1 + period * first_block;
  }

  friend bool operator==(const ClosedFormParams&, const ClosedFormParams&) = default;
};

namespace detail {

inline ClosedFormParams closed_form_for(const LeftInfiniteWord& lambda,
                                        const RightInfiniteWord& rho) {
  ClosedFormParams cf;
  cf.left_period = lambda.period();
  cf.right_period = rho.period();
  cf.left_preperiod = lambda.preperiod();
  cf.right_preperiod = rho.preperiod();
  auto conj = is_conjugate(cf.left_period, cf.right_period);
  if (!conj) throw std::domain_error("closed form undefined: periods not conjugate");
  cf.conjugation = *conj;
  const std::size_t p = cf.left_period.size();
  const std::size_t zlen = cf.conjugation.z.size();
  cf.period = p;
  cf.max_preperiod = cf.left_preperiod.size();
  cf.min_preperiod = cf.right_preperiod.size();
  cf.rog_bound = cf.max_preperiod + p - 1;
  const std::size_t base = cf.min_preperiod + zlen;  // <= M
  cf.phase_start = cf.rog_bound + (p - (cf.rog_bound - base) % p) % p;
  cf.phase_periods = (cf.phase_start - base) / p;
  cf.aligned_prefix = rho.sample(cf.phase_start);
  const std::size_t needed = (cf.rog_bound - zlen) / p + 1;
  cf.first_block = needed > cf.phase_periods ? std::max<std::size_t>(1, needed - cf.phase_periods) : 1;
  return cf;
}

}  // namespace detail

inline ClosedFormParams closed_form_params(const LeftInfiniteWord& lambda,
                                           const RightInfiniteWord& rho) {
  if (!lambda.is_ultimately_periodic() || !rho.is_ultimately_periodic()) {
    throw std::domain_error("closed form undefined for generator words");
  }
  if (rho.preperiod().size() > lambda.preperiod().size()) {
    ClosedFormParams cf = detail::closed_form_for(mirror(rho), mirror(lambda));
    cf.swapped = true;
    return cf;
  }
  return detail::closed_form_for(lambda, rho);
}

// rog(n) when n is past the closed-form threshold, nothing below it.
inline std::optional<std::size_t> closed_form_rog(const ClosedFormParams& cf,
                                                  std::size_t n) {
  if (cf.period == 0 || n < cf.periodic_from()) return std::nullopt;
  const std::size_t offset = n - cf.phase_start - 1;
  return cf.rog_bound - offset % cf.period;
}

// Exact images of the gap functions of a conjugate-period pair.
struct GapSets {
  std::optional<std::set<std::size_t>> log;  // nothing: LOG is all of N
  std::set<std::size_t> rog;
  std::set<std::size_t> og;
  ClosedFormParams params;
  std::size_t rog_periodic_from = 0;
  std::size_t og_periodic_from = 0;
  std::size_t og_cycle = 0;
  std::size_t horizon = 0;
};

inline constexpr std::size_t kExactSetsHorizonCap = std::size_t{1} << 16;

namespace detail {

inline bool cycles_from(const std::vector<std::size_t>& values,
                        std::size_t from, std::size_t cycle) {
  if (values.size() < from + 2 * cycle) return false;
  for (std::size_t n = from; n + cycle < values.size(); ++n) {
    if (values[n] != values[n + cycle]) return false;
  }
  return true;
}

}  // namespace detail

// ROG is the brute-force rog image below the closed-form threshold plus
// {M-p+1, ..., M}. log resets (log = 0 exactly when lambda_n = rho_n) can
// only recur past |w1| + |w2| + p when both preperiods are empty; otherwise
// log grows without bound and og eventually equals rog. OG is read off a
// scanned window once its cycle has been confirmed; a window that never
// confirms raises instead of guessing.
inline GapSets exact_gap_sets(const LeftInfiniteWord& lambda,
                              const RightInfiniteWord& rho) {
  GapSets sets;
  sets.params = closed_form_params(lambda, rho);
  const ClosedFormParams& cf = sets.params;
  const std::size_t p = cf.period;
  const std::size_t bound = cf.rog_bound;
  const std::size_t resets_until =
      lambda.preperiod().size() + rho.preperiod().size() + p;

  sets.rog_periodic_from = cf.periodic_from();
  sets.og_periodic_from = std::max(sets.rog_periodic_from, resets_until + bound + 1);
  std::size_t horizon = std::max(cf.phase_start + 1 + p * (cf.first_block + 2),
                                 sets.og_periodic_from + 3 * p);

  for (;; horizon += p) {
    if (horizon > kExactSetsHorizonCap) {
      throw std::runtime_error("gap cycle not confirmed below horizon " +
                               std::to_string(kExactSetsHorizonCap));
    }
    const GapSequence seq = gap_sequence(lambda, rho, horizon);
    std::vector<std::size_t> og(horizon + 1), log(horizon + 1);
    for (const auto& r : seq.records) {
      og[r.n] = r.og;
      log[r.n] = r.log;
    }
    bool log_resets = false;
    for (std::size_t n = resets_until; n <= horizon; ++n) log_resets |= (log[n] == 0);
    if (log_resets && !detail::cycles_from(log, sets.og_periodic_from, p)) continue;

    std::size_t cycle = 0;
    for (std::size_t c = p; c <= 3 * p && cycle == 0; c += p) {
      if (detail::cycles_from(og, sets.og_periodic_from, c)) cycle = c;
    }
    if (cycle == 0) continue;

    sets.og_cycle = cycle;
    sets.horizon = horizon;
    sets.og = std::set<std::size_t>(og.begin(), og.end());
    if (log_resets) sets.log = std::set<std::size_t>(log.begin(), log.end());
    for (std::size_t n = 0; n < sets.rog_periodic_from; ++n) {
      sets.rog.insert(seq.records[n].rog);
    }
    for (std::size_t j = 0; j < p; ++j) sets.rog.insert(bound - j);
    return sets;
  }
}

// lambda = ...uuu w1 and rho = w2 uuu... with a common period word u.
struct PeriodicWitness {
  Word period;
  Word left_preperiod;
  Word right_preperiod;

  friend bool operator==(const PeriodicWitness&, const PeriodicWitness&) = default;
};

enum class Extension {
  right_extends_left,  // rho = lambda w
  left_extends_right,  // lambda = rho w
};

struct ExtensionWitness {
  Extension kind = Extension::right_extends_left;
  Word word;

  friend bool operator==(const ExtensionWitness&, const ExtensionWitness&) = default;
};

// Largest og seen up to two horizons.
struct GrowthEvidence {
  std::size_t short_horizon = 0;
  std::size_t short_max = 0;
  std::size_t long_horizon = 0;
  std::size_t long_max = 0;

  bool grows() const { return long_max > short_max; }
};

struct FinitenessVerdict {
  bool decided = true;
  bool finite = false;
  std::optional<PeriodicWitness> witness;
  std::optional<ExtensionWitness> extension;
  std::optional<GrowthEvidence> evidence;
  std::string reason;
};

inline constexpr std::size_t kEvidenceShortHorizon = 256;
inline constexpr std::size_t kEvidenceLongHorizon = 1024;

inline GrowthEvidence growth_evidence(const GapSequence& seq,
                                      std::size_t short_horizon) {
  return {short_horizon, seq.max_og(short_horizon), seq.horizon(),
          seq.max_og(seq.horizon())};
}

// OG is finite iff both words are ultimately periodic with conjugate periods.
// Generator words only get sampled evidence.
inline FinitenessVerdict decide_og_finite(
    const LeftInfiniteWord& lambda, const RightInfiniteWord& rho,
    std::size_t short_horizon = kEvidenceShortHorizon,
    std::size_t long_horizon = kEvidenceLongHorizon) {
  FinitenessVerdict verdict;
  if (!lambda.is_ultimately_periodic() || !rho.is_ultimately_periodic()) {
    verdict.decided = false;
    verdict.evidence =
        growth_evidence(gap_sequence(lambda, rho, long_horizon), short_horizon);
    verdict.reason = "generator words: only sampled evidence is available";
    return verdict;
  }
  const auto conj = is_conjugate(lambda.period(), rho.period());
  if (!conj) {
    verdict.reason = "periods not conjugate";
    return verdict;
  }
  // rho = w2 (z y)^inf = w2 z (y z)^inf.
  verdict.finite = true;
  verdict.witness = PeriodicWitness{lambda.period(), lambda.preperiod(),
                                    rho.preperiod() + conj->z};
  return verdict;
}

// OG of two left-infinite words is finite iff one is the other followed by a
// finite word.
inline FinitenessVerdict decide_og_finite_one_sided(
    const LeftInfiniteWord& lambda, const LeftInfiniteWord& rho,
    std::size_t short_horizon = kEvidenceShortHorizon,
    std::size_t long_horizon = kEvidenceLongHorizon) {
  FinitenessVerdict verdict;
  if (!lambda.is_ultimately_periodic() || !rho.is_ultimately_periodic()) {
    verdict.decided = false;
    verdict.evidence = growth_evidence(
        one_sided_gap_sequence(lambda, rho, long_horizon), short_horizon);
    verdict.reason = "generator words: only sampled evidence is available";
    return verdict;
  }
  if (!period_sets_equal(lambda, rho)) {
    verdict.reason = "periods not conjugate";
    return verdict;
  }
  // Truncations past the preperiod repeat with period p, so these depths
  // cover every candidate.
  const std::size_t depth =
      std::max(lambda.preperiod().size(), rho.preperiod().size()) +
      lambda.period().size();
  for (std::size_t k = 0; k <= depth; ++k) {
    if (truncate(rho, k) == lambda) {
      verdict.finite = true;
      verdict.extension = ExtensionWitness{Extension::right_extends_left, rho.sample(k)};
      return verdict;
    }
    if (truncate(lambda, k) == rho) {
      verdict.finite = true;
      verdict.extension = ExtensionWitness{Extension::left_extends_right, lambda.sample(k)};
      return verdict;
    }
  }
  verdict.reason = "neither word extends the other";
  return verdict;
}

}  // namespace overlap_gap

#endif  // OVERLAP_GAP_SEQUENCES_HPP_
