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

// Word literals:
//
//   left-infinite   (u)~w    ...uuuw      e.g. (baa)~  (bbaa)~cab
//   right-infinite  w~(u)    wuuu...      e.g. ~(aab)  ab~(ba)
//   generator       @thue-morse  @fibonacci
//
// Letters are single ASCII alphanumerics and u must be non-empty. Whether a
// generator is left or right infinite depends on the slot it is parsed for.

#ifndef OVERLAP_GAP_LITERAL_HPP_
#define OVERLAP_GAP_LITERAL_HPP_

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "overlap_gap/infinite.hpp"

namespace overlap_gap {

class LiteralError : public std::invalid_argument {
 public:
  LiteralError(std::string_view literal, const std::string& what)
      : std::invalid_argument("bad word literal '" + std::string(literal) +
                              "': " + what) {}
};

namespace detail {

inline void require_letters(std::string_view literal, std::string_view part) {
  for (char c : part) {
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      throw LiteralError(literal, std::string("'") + c + "' is not a letter");
    }
  }
}

}  // namespace detail

template <Side S>
InfiniteWord<S> parse_word(std::string_view literal) {
  if (literal.starts_with('@')) {
    const auto name = literal.substr(1);
    if (name == "thue-morse" || name == "fibonacci") {
      return make_generator<S>(name);
    }
    throw LiteralError(literal, "unknown generator");
  }
  if (std::ranges::count(literal, '~') != 1) {
    throw LiteralError(literal, "expected exactly one '~'");
  }
  const std::size_t tilde = literal.find('~');
  std::string_view period;
  std::string_view preperiod;
  if constexpr (S == Side::left) {
    const auto head = literal.substr(0, tilde);
    if (head.size() < 2 || head.front() != '(' || head.back() != ')') {
      throw LiteralError(literal, "left-infinite words are written (u)~w");
    }
    period = head.substr(1, head.size() - 2);
    preperiod = literal.substr(tilde + 1);
  } else {
    const auto tail = literal.substr(tilde + 1);
    if (tail.size() < 2 || tail.front() != '(' || tail.back() != ')') {
      throw LiteralError(literal, "right-infinite words are written w~(u)");
    }
    period = tail.substr(1, tail.size() - 2);
    preperiod = literal.substr(0, tilde);
  }
  if (period.empty()) throw LiteralError(literal, "empty period");
  detail::require_letters(literal, period);
  detail::require_letters(literal, preperiod);
  return InfiniteWord<S>::periodic(period, preperiod);
}

inline LeftInfiniteWord parse_left(std::string_view literal) {
  return parse_word<Side::left>(literal);
}

inline RightInfiniteWord parse_right(std::string_view literal) {
  return parse_word<Side::right>(literal);
}

}  // namespace overlap_gap

#endif  // OVERLAP_GAP_LITERAL_HPP_
