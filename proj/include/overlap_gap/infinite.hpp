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

// Finitely represented left-infinite and right-infinite words.
//
// A left-infinite word ...a2 a1 a0 is indexed from its right end and a
// right-infinite word a0 a1 a2 ... from its left end, so in both cases
// position 0 is the letter adjacent to the finite boundary. An ultimately
// periodic word is always stored in canonical form: primitive period and
// shortest preperiod.

#ifndef OVERLAP_GAP_INFINITE_HPP_
#define OVERLAP_GAP_INFINITE_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "overlap_gap/words.hpp"

namespace overlap_gap {

enum class Side { left, right };

enum class Generator { thue_morse, fibonacci };

inline std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::thue_morse:
      return "thue-morse";
    case Generator::fibonacci:
      return "fibonacci";
  }
  return "?";
}

// Letter n of the right-infinite Thue-Morse word over {a, b}.
inline char thue_morse_letter(std::uint64_t n) {
  return (std::popcount(n) & 1) ? 'b' : 'a';
}

// Letter n of the Fibonacci word abaababaabaab... Letter n is b exactly when
// the Zeckendorf representation of n over 1, 2, 3, 5, 8, ... uses 1.
inline char fibonacci_letter(std::uint64_t n) {
  std::vector<std::uint64_t> fib{1, 2};
  while (fib.back() <= n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  bool uses_one = false;
  for (auto it = fib.rbegin(); it != fib.rend() && n > 0; ++it) {
    if (*it <= n) {
      n -= *it;
      uses_one = (*it == 1);
    }
  }
  return uses_one ? 'b' : 'a';
}

inline char generator_letter(Generator g, std::uint64_t n) {
  return g == Generator::thue_morse ? thue_morse_letter(n) : fibonacci_letter(n);
}

struct PeriodicForm {
  Word period;
  Word preperiod;

  friend bool operator==(const PeriodicForm&, const PeriodicForm&) = default;
};

// Canonical form of ...uuu w: replace u by its primitive root, then move the
// shared first letter of u and w into the period until they differ.
inline PeriodicForm canonical_left_form(std::string_view period,
                                        std::string_view preperiod) {
  if (period.empty()) throw std::invalid_argument("period must not be empty");
  PeriodicForm form{primitive_root(Word(period)).root, Word(preperiod)};
  std::size_t absorbed = 0;
  while (absorbed < form.preperiod.size() &&
         form.period.front() == form.preperiod[absorbed]) {
    form.period = rotate_left(form.period, 1);
    ++absorbed;
  }
  form.preperiod.erase(0, absorbed);
  return form;
}

template <Side S>
class InfiniteWord {
 public:
  static constexpr Side side = S;

  // For a left word this is ...uuu w, for a right word w uuu...
  static InfiniteWord periodic(std::string_view period,
                               std::string_view preperiod = {}) {
    if constexpr (S == Side::left) {
      return InfiniteWord(canonical_left_form(period, preperiod));
    } else {
      // The mirror image of w u^inf is the left word ^inf(u~) w~.
      PeriodicForm mirror =
          canonical_left_form(reversed(period), reversed(preperiod));
      return InfiniteWord(
          PeriodicForm{reversed(mirror.period), reversed(mirror.preperiod)});
    }
  }

  static InfiniteWord generated(Generator g) { return InfiniteWord(g); }

  bool is_ultimately_periodic() const noexcept {
    return std::holds_alternative<PeriodicForm>(rep_);
  }

  const PeriodicForm& periodic_form() const {
    if (const auto* form = std::get_if<PeriodicForm>(&rep_)) return *form;
    throw std::domain_error("generator words have no periodic form");
  }

  const Word& period() const { return periodic_form().period; }
  const Word& preperiod() const { return periodic_form().preperiod; }

  std::optional<Generator> generator() const {
    if (const auto* g = std::get_if<Generator>(&rep_)) return *g;
    return std::nullopt;
  }

  // Letter at distance `position` from the finite boundary.
  char at(std::size_t position) const {
    if (const auto* g = std::get_if<Generator>(&rep_)) {
      return generator_letter(*g, position);
    }
    const auto& [u, w] = std::get<PeriodicForm>(rep_);
    if constexpr (S == Side::left) {
      if (position < w.size()) return w[w.size() - 1 - position];
      return u[u.size() - 1 - (position - w.size()) % u.size()];
    } else {
      if (position < w.size()) return w[position];
      return u[(position - w.size()) % u.size()];
    }
  }

  // The length-n suffix of a left word or the length-n prefix of a right
  // word, in reading order.
  Word sample(std::size_t n) const {
    Word out(n, '\0');
    for (std::size_t i = 0; i < n; ++i) {
      if constexpr (S == Side::left) {
        out[n - 1 - i] = at(i);
      } else {
        out[i] = at(i);
      }
    }
    return out;
  }

  // Literal syntax: `(u)~w` for left words, `w~(u)` for right words,
  // `@name` for generators.
  std::string literal() const {
    if (const auto* g = std::get_if<Generator>(&rep_)) {
      return "@" + std::string(generator_name(*g));
    }
    const auto& [u, w] = std::get<PeriodicForm>(rep_);
    if constexpr (S == Side::left) {
      return "(" + u + ")~" + w;
    } else {
      return w + "~(" + u + ")";
    }
  }

  friend bool operator==(const InfiniteWord&, const InfiniteWord&) = default;

 private:
  explicit InfiniteWord(PeriodicForm form) : rep_(std::move(form)) {}
  explicit InfiniteWord(Generator g) : rep_(g) {}

  std::variant<PeriodicForm, Generator> rep_;
};

using LeftInfiniteWord = InfiniteWord<Side::left>;
using RightInfiniteWord = InfiniteWord<Side::right>;

inline LeftInfiniteWord canonicalize_left(std::string_view period,
                                          std::string_view preperiod) {
  return LeftInfiniteWord::periodic(period, preperiod);
}

inline RightInfiniteWord canonicalize_right(std::string_view preperiod,
                                            std::string_view period) {
  return RightInfiniteWord::periodic(period, preperiod);
}

inline Word sample_suffix(const LeftInfiniteWord& lambda, std::size_t n) {
  return lambda.sample(n);
}

inline Word sample_prefix(const RightInfiniteWord& rho, std::size_t n) {
  return rho.sample(n);
}

// Named built-in words. `periodic` takes (period, preperiod); the others take
// no parameters. Left generator words are the mirror images of right ones.
template <Side S>
InfiniteWord<S> make_generator(std::string_view name,
                               std::string_view period = {},
                               std::string_view preperiod = {}) {
  if (name == "thue-morse") return InfiniteWord<S>::generated(Generator::thue_morse);
  if (name == "fibonacci") return InfiniteWord<S>::generated(Generator::fibonacci);
  if (name == "periodic") {
    if (period.empty()) {
      throw std::invalid_argument("periodic generator needs a non-empty period");
    }
    return InfiniteWord<S>::periodic(period, preperiod);
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

// Two ultimately periodic words have the same period words iff their
// canonical periods are conjugate.
template <Side S1, Side S2>
bool period_sets_equal(const InfiniteWord<S1>& a, const InfiniteWord<S2>& b) {
  if (!a.is_ultimately_periodic() || !b.is_ultimately_periodic()) {
    throw std::domain_error("period set undefined for generator words");
  }
  return is_conjugate(a.period(), b.period()).has_value();
}

// The mirror image, read from the other end.
template <Side S>
auto mirror(const InfiniteWord<S>& word) {
  constexpr Side other = S == Side::left ? Side::right : Side::left;
  if (auto g = word.generator()) return InfiniteWord<other>::generated(*g);
  return InfiniteWord<other>::periodic(reversed(word.period()),
                                       reversed(word.preperiod()));
}

// lambda followed by w.
inline LeftInfiniteWord extend(const LeftInfiniteWord& lambda,
                               std::string_view w) {
  return LeftInfiniteWord::periodic(lambda.period(), lambda.preperiod() + Word(w));
}

// lambda with its last k letters removed.
inline LeftInfiniteWord truncate(const LeftInfiniteWord& lambda, std::size_t k) {
  const auto& [u, w] = lambda.periodic_form();
  if (k <= w.size()) {
    return LeftInfiniteWord::periodic(u, std::string_view(w).substr(0, w.size() - k));
  }
  const std::size_t cut = (k - w.size()) % u.size();
  return LeftInfiniteWord::periodic(rotate_left(u, u.size() - cut));
}

}  // namespace overlap_gap

#endif  // OVERLAP_GAP_INFINITE_HPP_
