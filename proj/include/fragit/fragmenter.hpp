//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_FRAGMENTER_HPP
#define FRAGIT_FRAGMENTER_HPP

#include <string>
#include <vector>

#include "fragit/molecule.hpp"
#include "fragit/settings.hpp"
#include "fragit/smarts.hpp"

namespace fragit {

inline constexpr const char *kExplicitProvenance = "explicit";

// A bond across which two fragments meet. `a` is the first image of the
// fragmentation pattern (or the first atom of an explicit pair), `b` the
// second; the deck's bond group is written in this orientation.
struct CutBond {
  int a = 0;
  int b = 0;
  std::string provenance;

  friend bool operator==(const CutBond &, const CutBond &) = default;
};

struct Fragmentation {
  std::vector<std::vector<int>> fragments; // each ascending, ordered by min
  std::vector<int> charges;
  std::vector<CutBond> cut_bonds;
  std::vector<int> protected_atoms; // ascending
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return fragments.size(); }
  std::size_t min_size() const;
  std::size_t max_size() const;
  // Fragment ordinal (1-based) of every atom; entry 0 unused.
  std::vector<int> membership(std::size_t atom_count) const;

  friend bool operator==(const Fragmentation &,
                         const Fragmentation &) = default;
};

// Parses a named pattern, prefixing errors with the name.
SmartsPattern compile_pattern(const NamedPattern &pattern);

std::vector<int> locate_protected_atoms(const Molecule &mol,
                                        const PatternSet &patterns);

// Throws kInvalidPair for explicit pairs that are not bonded.
std::vector<CutBond> locate_cut_bonds(const Molecule &mol,
                                      const PatternSet &patterns,
                                      const std::vector<int> &protected_atoms,
                                      const ExplicitPairs &explicit_pairs);

Fragmentation build_fragments(const Molecule &mol,
                              const std::vector<CutBond> &cuts);

std::vector<int>
assign_fragment_charges(const Molecule &mol,
                        const std::vector<std::vector<int>> &fragments);

// Throws kConfig when n < 1.
Fragmentation group_fragments(const Fragmentation &f, int n);

Fragmentation merge_glycine(const Molecule &mol, const Fragmentation &f,
                            const std::string &glycine_pattern);

// Patterns in force for the settings: overrides or the builtin set.
PatternSet effective_patterns(const JobSettings &settings);

Fragmentation fragment(const Molecule &mol, const JobSettings &settings);

} // namespace fragit

#endif // FRAGIT_FRAGMENTER_HPP
