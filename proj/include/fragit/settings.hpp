//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_SETTINGS_HPP
#define FRAGIT_SETTINGS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fragit {

struct NamedPattern {
  std::string name;
  std::string smarts;

  friend bool operator==(const NamedPattern &, const NamedPattern &) = default;
};

struct PatternSet {
  std::vector<NamedPattern> fragmentation;
  std::vector<NamedPattern> protection;
  std::string glycine;

  friend bool operator==(const PatternSet &, const PatternSet &) = default;
};

using ExplicitPairs = std::vector<std::pair<int, int>>;

struct GamessSettings {
  std::string scf_type = "RHF";
  std::string basis = "3-21G";
  int memory_per_core = 1000; // MB
  std::string run_type = "energy";

  friend bool operator==(const GamessSettings &,
                         const GamessSettings &) = default;
};

struct JobSettings {
  std::string input_path;
  std::string output_path; // empty: input stem + ".inp"
  std::optional<std::string> input_format;
  int model_index = 1;

  bool use_protection = true;
  int group_size = 1;
  bool merge_glycine = false;
  std::optional<int> central_fragment;
  std::optional<double> boundary_distance;
  std::optional<double> active_distance;
  std::optional<double> buffer_distance;
  std::optional<PatternSet> pattern_overrides;
  ExplicitPairs explicit_pairs;

  bool emit_pymol = false;
  bool emit_jmol = false;
  std::string pymol_path; // empty: input stem + ".pml"
  std::string jmol_path;  // empty: input stem + ".jmol"
  GamessSettings gamess;

  std::optional<std::string> config_in;
  std::optional<std::string> config_out;

  friend bool operator==(const JobSettings &, const JobSettings &) = default;
};

} // namespace fragit

#endif // FRAGIT_SETTINGS_HPP
