//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_PERCEPTION_HPP
#define FRAGIT_PERCEPTION_HPP

#include <vector>

#include "fragit/molecule.hpp"

namespace fragit {

inline constexpr double kBondTolerance = 0.45;
inline constexpr double kMinBondLength = 0.4;

// Distance-based connectivity, all orders 1. Throws kUnsupportedElement for
// atoms without a covalent radius.
std::vector<Bond> perceive_bonds(const std::vector<Atom> &atoms);

// Raises bond orders until valence rules are met where possible.
Molecule perceive_bond_orders(const Molecule &mol);

// Formal charges on N and O from their bond-order sums. Charges already on
// other elements are kept. Throws kPerception when |charge| > 1.
Molecule assign_formal_charges(const Molecule &mol);

// Bonds, orders and charges in one go.
// Bond orders then charges; fails if an H or C atom keeps an open valence.
Molecule perceive_orders_and_charges(const Molecule &mol);

Molecule perceive(std::vector<Atom> atoms, std::string name = {});

// Residual deficit of atom i: smallest allowed valence not below the current
// bond-order sum, minus that sum. Zero for elements without a rule.
int valence_deficit(const Molecule &mol, int i);

} // namespace fragit

#endif // FRAGIT_PERCEPTION_HPP
