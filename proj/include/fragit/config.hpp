//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_CONFIG_HPP
#define FRAGIT_CONFIG_HPP

#include <string>
#include <string_view>

#include "fragit/settings.hpp"

namespace fragit {

// INI text with sections [fragmentation], [protection], [output] and
// [explicitfragmentpairs]. Paths, model and format are not stored.
std::string write_config(const JobSettings &settings);

// Applies the document on top of `base`. Throws kConfig with a line number
// for unknown sections or keys and malformed values.
JobSettings read_config(std::string_view text, JobSettings base = {});

// "1,2;3,4;" -> {(1,2),(3,4)}. `line` is only used in messages.
ExplicitPairs parse_pairs(std::string_view text, int line = 0);
std::string format_pairs(const ExplicitPairs &pairs);

// Shortest text that parses back to exactly `value`.
std::string format_double(double value);

} // namespace fragit

#endif // FRAGIT_CONFIG_HPP
