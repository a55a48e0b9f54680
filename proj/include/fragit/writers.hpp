//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_WRITERS_HPP
#define FRAGIT_WRITERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fragit/fragmenter.hpp"
#include "fragit/molecule.hpp"
#include "fragit/regions.hpp"
#include "fragit/settings.hpp"

namespace fragit {

// Six colours cycled over fragments.
inline constexpr const char *kPalette[] = {"red",    "green",  "blue",
                                           "orange", "yellow", "magenta"};

// "1 -28 30" style list: runs of consecutive indices collapse to "a -b".
std::vector<std::string> index_ranges(const std::vector<int> &atoms);

// GAMESS basis keywords ("n21", 3) for a basis name; throws kConfig.
std::pair<std::string, int> gamess_basis(const std::string &name);

std::string write_gamess_fmo(const Molecule &mol, const Fragmentation &f,
                             const std::optional<RegionAssignment> &regions,
                             const GamessSettings &settings);

// `structure_path` is what the script loads.
std::string write_pymol_script(const Molecule &mol, const Fragmentation &f,
                               const std::optional<RegionAssignment> &regions,
                               const std::string &structure_path);
std::string write_jmol_script(const Molecule &mol, const Fragmentation &f,
                              const std::optional<RegionAssignment> &regions,
                              const std::string &structure_path);

} // namespace fragit

#endif // FRAGIT_WRITERS_HPP
