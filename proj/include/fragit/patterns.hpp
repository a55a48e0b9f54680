//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_PATTERNS_HPP
#define FRAGIT_PATTERNS_HPP

#include "fragit/settings.hpp"

namespace fragit {

inline constexpr const char *kProteinPattern = "[$(CN)][$(C(=O)NCC(=O))]";
inline constexpr const char *kSugarPattern =
    "[$(C1C(CO)OC(O)C(O)C1(O))][$(OC1C(O)C(O)CC(CO)O1)]";
inline constexpr const char *kDnaPattern = "[$(CCOP)][$(CC1OCCC1)]";
inline constexpr const char *kNh2Protection = "[$(NH2)]CC(=O)[$(NCC=O)]";
inline constexpr const char *kNh3Protection = "[$(NH3)]CC(=O)[$(NCC=O)]";

// Amide N carrying a CH2 neighbour (Gly alpha carbon, also Pro delta),
// bonded to an acyl carbon. Free N-termini have no acyl partner.
inline constexpr const char *kGlycinePattern = "[$(N[CH2])][$(C(=O)C)]";

PatternSet builtin_patterns();

} // namespace fragit

#endif // FRAGIT_PATTERNS_HPP
