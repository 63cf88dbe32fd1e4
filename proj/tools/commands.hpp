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

// Subcommands of the overlap_gap tool. Each takes parsed options, writes to
// the given streams and returns the process exit code.

#ifndef OVERLAP_GAP_TOOLS_COMMANDS_HPP_
#define OVERLAP_GAP_TOOLS_COMMANDS_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "overlap_gap/overlap_gap.hpp"

namespace overlap_gap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfinite = 1;  // also: failed checks, undefined sets
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUndecided = 3;

inline constexpr std::size_t kDefaultHorizonCap = 1'000'000;
inline constexpr std::size_t kDefaultTableHorizon = 20;

// OVERLAP_GAP_MAX_N overrides the default cap.
inline std::size_t horizon_cap() {
  const char* env = std::getenv("OVERLAP_GAP_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultHorizonCap;
  std::size_t used = 0;
  const unsigned long long cap = std::stoull(env, &used);
  if (env[used] != '\0') throw std::invalid_argument("OVERLAP_GAP_MAX_N is not a number");
  return static_cast<std::size_t>(cap);
}

enum class Format { csv, md };

struct TableOptions {
  std::string left;
  std::string right;
  std::size_t horizon = kDefaultTableHorizon;
  bool one_sided = false;
  Format format = Format::csv;
};

inline void write_csv(const GapSequence& seq, std::ostream& out) {
  out << "n,log,rog,og\n";
  for (const auto& r : seq.records) {
    out << r.n << ',' << r.log << ',' << r.rog << ',' << r.og << '\n';
  }
}

// One row per function with n across the top.
inline void write_markdown(const GapSequence& seq, std::ostream& out) {
  auto row = [&](const char* label, auto field) {
    out << "| " << label << " |";
    for (const auto& r : seq.records) out << ' ' << field(r) << " |";
    out << '\n';
  };
  row("n", [](const GapRecord& r) { return r.n; });
  out << "|---|";
  for (std::size_t i = 0; i < seq.records.size(); ++i) out << "---|";
  out << '\n';
  row("log", [](const GapRecord& r) { return r.log; });
  row("rog", [](const GapRecord& r) { return r.rog; });
  row("og", [](const GapRecord& r) { return r.og; });
}

inline int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  GapSequence seq;
  try {
    const std::size_t cap = horizon_cap();
    if (opts.horizon > cap) {
      err << "horizon " << opts.horizon << " exceeds the cap " << cap
          << " (set OVERLAP_GAP_MAX_N to raise it)\n";
      return kExitUsage;
    }
    const auto lambda = parse_left(opts.left);
    seq = opts.one_sided ? one_sided_gap_sequence(lambda, parse_left(opts.right), opts.horizon)
                         : gap_sequence(lambda, parse_right(opts.right), opts.horizon);
  } catch (const std::logic_error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (opts.format == Format::csv) {
    write_csv(seq, out);
  } else {
    write_markdown(seq, out);
  }
  return kExitOk;
}

inline void write_verdict(const FinitenessVerdict& v, std::ostream& out) {
  out << (!v.decided ? "undecided" : v.finite ? "finite" : "infinite") << '\n';
  if (v.witness) {
    out << "witness: (" << v.witness->period << ")~" << v.witness->left_preperiod << ' '
        << v.witness->right_preperiod << "~(" << v.witness->period << ")\n";
  }
  if (v.extension) {
    out << "witness: "
        << (v.extension->kind == Extension::right_extends_left ? "rho = lambda w"
                                                               : "lambda = rho w")
        << " with w=" << v.extension->word << '\n';
  }
  if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
  if (v.evidence) {
    out << "evidence: max og over [0," << v.evidence->short_horizon
        << "] = " << v.evidence->short_max << ", over [0," << v.evidence->long_horizon
        << "] = " << v.evidence->long_max << (v.evidence->grows() ? " (grows)" : " (flat)")
        << '\n';
  }
}

inline int cmd_decide(const std::string& left, const std::string& right, bool one_sided,
                      std::ostream& out, std::ostream& err) {
  FinitenessVerdict verdict;
  try {
    const auto lambda = parse_left(left);
    verdict = one_sided ? decide_og_finite_one_sided(lambda, parse_left(right))
                        : decide_og_finite(lambda, parse_right(right));
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  write_verdict(verdict, out);
  if (!verdict.decided) return kExitUndecided;
  return verdict.finite ? kExitOk : kExitInfinite;
}

inline std::string format_set(const std::set<std::size_t>& values) {
  std::string s = "{";
  for (auto it = values.begin(); it != values.end(); ++it) {
    if (it != values.begin()) s += ",";
    s += std::to_string(*it);
  }
  return s + "}";
}

inline int cmd_sets(const std::string& left, const std::string& right, std::ostream& out,
                    std::ostream& err) {
  LeftInfiniteWord lambda = LeftInfiniteWord::generated(Generator::thue_morse);
  RightInfiniteWord rho = RightInfiniteWord::generated(Generator::thue_morse);
  try {
    lambda = parse_left(left);
    rho = parse_right(right);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  GapSets sets;
  try {
    if (!period_sets_equal(lambda, rho)) {
      err << "periods not conjugate: LOG, ROG and OG are infinite\n";
      return kExitInfinite;
    }
    sets = exact_gap_sets(lambda, rho);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInfinite;
  }
  out << "LOG: " << (sets.log ? format_set(*sets.log) : "unbounded (all of N)") << '\n';
  out << "ROG: " << format_set(sets.rog) << '\n';
  out << "OG: " << format_set(sets.og) << '\n';
  const auto& cf = sets.params;
  out << "period p=" << cf.period << ", M=" << cf.rog_bound << ", rog periodic from n="
      << sets.rog_periodic_from << ", og cycle " << sets.og_cycle << " from n="
      << sets.og_periodic_from << '\n';
  return kExitOk;
}

inline int cmd_verify(const std::string& suite, std::uint64_t seed,
                      const std::optional<std::string>& output, std::ostream& out,
                      std::ostream& err) {
  std::vector<verify::PropertyReport> reports;
  try {
    reports = verify::run_suite(suite, seed);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream file;
  if (output) {
    file.open(*output);
    if (!file) {
      err << "cannot write " << *output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = output ? static_cast<std::ostream&>(file) : out;
  bool ok = true;
  for (const auto& r : reports) {
    sink << r.to_json().dump() << '\n';
    err << (r.passed() ? "PASS " : "FAIL ") << r.property << " (" << r.instances
        << " instances)\n";
    ok &= r.passed();
  }
  return ok ? kExitOk : kExitInfinite;
}

// ---------------------------------------------------------------------------
// Kernel benchmark

struct BenchOptions {
  std::size_t length = 100'000;
  std::size_t trials = 5;
  std::uint64_t seed = verify::kDefaultSeed;
  // "sparse": independent words over {a,b} where each letter is b with
  // probability 2/L, so a pair differs in a handful of places.
  // "uniform": independent uniform words over {a,b}.
  std::string workload = "sparse";
};

struct BenchResult {
  double naive_median_ms = 0;
  double linear_median_ms = 0;
  bool agree = true;

  double speedup() const {
    return linear_median_ms > 0 ? naive_median_ms / linear_median_ms : 0;
  }
};

inline Word sparse_word(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution rare(length > 4 ? 2.0 / static_cast<double>(length) : 0.5);
  Word w(length, 'a');
  for (auto& c : w) {
    if (rare(rng)) c = 'b';
  }
  return w;
}

inline std::pair<Word, Word> bench_pair(const BenchOptions& opts, std::mt19937_64& rng) {
  using verify::detail::random_word;
  if (opts.workload == "uniform") {
    return {random_word(rng, "ab", opts.length), random_word(rng, "ab", opts.length)};
  }
  if (opts.workload != "sparse") {
    throw std::invalid_argument("unknown workload '" + opts.workload + "'");
  }
  return {sparse_word(rng, opts.length), sparse_word(rng, opts.length)};
}

inline double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::ranges::sort(xs);
  const std::size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2;
}

inline BenchResult run_bench(const BenchOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::vector<double> naive_ms, linear_ms;
  BenchResult result;
  for (std::size_t t = 0; t < opts.trials; ++t) {
    const auto [u, v] = bench_pair(opts, rng);
    auto time = [](auto&& f, GapRecord& rec) {
      const auto start = std::chrono::steady_clock::now();
      rec = f();
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
    };
    GapRecord naive, linear;
    naive_ms.push_back(time([&] { return gap_record_naive(u, v); }, naive));
    linear_ms.push_back(time([&] { return gap_record_linear(u, v); }, linear));
    result.agree &= (naive == linear);
  }
  result.naive_median_ms = median(naive_ms);
  result.linear_median_ms = median(linear_ms);
  return result;
}

inline int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  BenchResult r;
  try {
    r = run_bench(opts);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  out << "length=" << opts.length << " trials=" << opts.trials << " workload=" << opts.workload
      << " seed=" << opts.seed << '\n';
  out << "naive median ms: " << r.naive_median_ms << '\n';
  out << "linear median ms: " << r.linear_median_ms << '\n';
  out << "speedup: " << r.speedup() << '\n';
  out << "outputs agree: " << (r.agree ? "yes" : "no") << '\n';
  return r.agree ? kExitOk : kExitInfinite;
}

}  // namespace overlap_gap::cli

#endif  // OVERLAP_GAP_TOOLS_COMMANDS_HPP_
