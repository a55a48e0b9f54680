//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/elements.hpp"

#include <array>
#include <cctype>

namespace fragit {
namespace {

constexpr std::array<const char *, 54> kSymbols = {
    "X",  "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne",
    "Na", "Mg", "Al", "Si", "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc",
    "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni", "Cu", "Zn", "Ga", "Ge",
    "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo", "Tc",
    "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I"};

struct Radius {
  int z;
  double r;
};

// Cordero et al. single-bond covalent radii (sp3 C).
constexpr std::array<Radius, 17> kRadii = {{
    {1, 0.31},  {5, 0.84},  {6, 0.76},  {7, 0.71},  {8, 0.66},  {9, 0.57},
    {11, 1.66}, {12, 1.41}, {15, 1.07}, {16, 1.05}, {17, 1.02}, {19, 2.03},
    {20, 1.76}, {26, 1.32}, {30, 1.22}, {35, 1.20}, {53, 1.39},
}};

constexpr std::array<int, 1> kOne = {1};
constexpr std::array<int, 1> kTwo = {2};
constexpr std::array<int, 1> kThree = {3};
constexpr std::array<int, 1> kFour = {4};
constexpr std::array<int, 2> kPhosphorus = {3, 5};
constexpr std::array<int, 3> kSulfur = {2, 4, 6};

} // namespace

std::optional<int> element_from_symbol(std::string_view symbol) {
  if (symbol.empty() || symbol.size() > 2)
    return std::nullopt;
  std::string canon;
  canon += static_cast<char>(std::toupper(static_cast<unsigned char>(symbol[0])));
  if (symbol.size() == 2)
    canon += static_cast<char>(std::tolower(static_cast<unsigned char>(symbol[1])));
  for (std::size_t z = 1; z < kSymbols.size(); ++z) {
    if (canon == kSymbols[z])
      return static_cast<int>(z);
  }
  return std::nullopt;
}

std::string element_symbol(int z) {
  if (z <= 0 || z >= static_cast<int>(kSymbols.size()))
    return "X";
  return kSymbols[static_cast<std::size_t>(z)];
}

std::optional<double> covalent_radius(int z) {
  for (const auto &entry : kRadii) {
    if (entry.z == z)
      return entry.r;
  }
  return std::nullopt;
}

std::span<const int> allowed_valences(int z) {
  switch (z) {
  case 1:
  case 9:
  case 17:
  case 35:
  case 53:
    return kOne;
  case 5:
    return kThree;
  case 6:
    return kFour;
  case 7:
    return kThree;
  case 8:
    return kTwo;
  case 15:
    return kPhosphorus;
  case 16:
    return kSulfur;
  default:
    return {};
  }
}

} // namespace fragit
