//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/patterns.hpp"

namespace fragit {

PatternSet builtin_patterns() {
  PatternSet set;
  set.fragmentation = {{"peptide", kProteinPattern},
                       {"sugar", kSugarPattern},
                       {"dna", kDnaPattern}};
  set.protection = {{"nh2", kNh2Protection}, {"nh3", kNh3Protection}};
  set.glycine = kGlycinePattern;
  return set;
}

} // namespace fragit
