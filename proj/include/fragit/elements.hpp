//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_ELEMENTS_HPP
#define FRAGIT_ELEMENTS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fragit {

// Atomic number for a symbol, case-insensitive ("CL", "Cl", "cl"), or
// nullopt when the symbol is not a known element.
std::optional<int> element_from_symbol(std::string_view symbol);

// Canonical capitalised symbol; "X" for unknown numbers.
std::string element_symbol(int z);

// Covalent radius in angstrom, nullopt for elements without a tabulated value.
std::optional<double> covalent_radius(int z);

// Allowed total bond-order sums in ascending order; empty when the element
// has no valence rule.
std::span<const int> allowed_valences(int z);

} // namespace fragit

#endif // FRAGIT_ELEMENTS_HPP
