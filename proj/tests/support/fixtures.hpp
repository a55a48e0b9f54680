//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_TESTS_FIXTURES_HPP
#define FRAGIT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "fragit/fragmenter.hpp"
#include "fragit/molecule.hpp"
#include "fragit/settings.hpp"

namespace fixtures {

std::string data_path(const std::string &relative);
std::string read_text(const std::string &path);

// Loads data/fixtures/<file> through the normal reader.
const fragit::Molecule &load(const std::string &file);

// Every data/corpus/*.sdf molecule with its file stem, sorted by name.
const std::vector<std::pair<std::string, fragit::Molecule>> &corpus();

struct Row {
  std::size_t n_frag = 0;
  std::size_t min_size = 0;
  std::size_t max_size = 0;
  int charge = 0;

  friend bool operator==(const Row &, const Row &) = default;
};

Row row(const fragit::Fragmentation &f);
std::string to_string(const Row &r);

// Settings for a fixture: defaults, or the committed config next to it.
fragit::JobSettings settings_for(const std::string &file);

} // namespace fixtures

#endif // FRAGIT_TESTS_FIXTURES_HPP
