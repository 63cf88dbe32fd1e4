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

#ifndef OVERLAP_GAP_OVERLAP_GAP_HPP_
#define OVERLAP_GAP_OVERLAP_GAP_HPP_

#include "overlap_gap/infinite.hpp"
#include "overlap_gap/literal.hpp"
#include "overlap_gap/overlap.hpp"
#include "overlap_gap/sequences.hpp"
#include "overlap_gap/verify.hpp"
#include "overlap_gap/words.hpp"

#endif  // OVERLAP_GAP_OVERLAP_GAP_HPP_
