//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_IO_HPP
#define FRAGIT_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "fragit/molecule.hpp"

namespace fragit {

enum class FileFormat { kPdb, kXyz, kSdf };

struct InputDocument {
  std::optional<FileFormat> format; // inferred from extension when empty
  std::string source_path;
  int model_index = 1;
};

std::optional<FileFormat> format_from_extension(std::string_view path);
std::optional<FileFormat> format_from_name(std::string_view name);

// Reads and, for PDB/XYZ, perceives bonds, orders and charges.
Molecule read_structure(const InputDocument &doc);

// In-memory variants; `name` becomes Molecule::name().
Molecule parse_pdb(std::string_view text, int model_index = 1,
                   std::string name = {});
Molecule parse_xyz(std::string_view text, std::string name = {});
Molecule parse_sdf(std::string_view text, std::string name = {});

} // namespace fragit

#endif // FRAGIT_IO_HPP
