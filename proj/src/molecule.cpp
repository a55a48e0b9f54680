//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "fragit/error.hpp"

namespace fragit {

Molecule::Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
                   std::string name)
    : name_(std::move(name)), atoms_(std::move(atoms)) {
  const int n = static_cast<int>(atoms_.size());
  for (int i = 0; i < n; ++i)
    atoms_[static_cast<std::size_t>(i)].index = i + 1;

  for (auto &bond : bonds) {
    if (bond.a > bond.b)
      std::swap(bond.a, bond.b);
    if (bond.a < 1 || bond.b > n)
      throw Error(ErrorKind::kIndex, "bond " + std::to_string(bond.a) + "-" +
                                         std::to_string(bond.b) +
                                         " references a missing atom");
    if (bond.a == bond.b)
      throw Error(ErrorKind::kIndex,
                  "self-bond on atom " + std::to_string(bond.a));
    if (bond.order < 1 || bond.order > 3)
      throw Error(ErrorKind::kIndex, "bond order " +
                                         std::to_string(bond.order) +
                                         " outside 1..3");
  }
  std::sort(bonds.begin(), bonds.end());
  auto dup = std::adjacent_find(bonds.begin(), bonds.end(),
                                [](const Bond &x, const Bond &y) {
                                  return x.a == y.a && x.b == y.b;
                                });
  if (dup != bonds.end())
    throw Error(ErrorKind::kIndex, "duplicate bond " + std::to_string(dup->a) +
                                       "-" + std::to_string(dup->b));
  bonds_ = std::move(bonds);

  adjacency_.assign(atoms_.size(), {});
  for (const auto &bond : bonds_) {
    adjacency_[static_cast<std::size_t>(bond.a - 1)].push_back(bond.b);
    adjacency_[static_cast<std::size_t>(bond.b - 1)].push_back(bond.a);
  }
  adjacency_orders_.assign(atoms_.size(), {});
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    auto &nbrs = adjacency_[i];
    std::sort(nbrs.begin(), nbrs.end());
    int hydrogens = 0;
    for (int j : nbrs) {
      if (atoms_[static_cast<std::size_t>(j - 1)].element == 1)
        ++hydrogens;
      auto key = bond_key(static_cast<int>(i) + 1, j);
      auto it = std::lower_bound(bonds_.begin(), bonds_.end(),
                                 Bond{key.first, key.second, 0});
      adjacency_orders_[i].push_back(it->order);
    }
    atoms_[i].attached_hydrogens = hydrogens;
  }
}

void Molecule::check_index(int i) const {
  if (i < 1 || i > static_cast<int>(atoms_.size()))
    throw Error(ErrorKind::kIndex, "atom index " + std::to_string(i) +
                                       " outside 1.." +
                                       std::to_string(atoms_.size()));
}

const Atom &Molecule::atom(int i) const {
  check_index(i);
  return atoms_[static_cast<std::size_t>(i - 1)];
}

const std::vector<int> &Molecule::neighbors(int i) const {
  check_index(i);
  return adjacency_[static_cast<std::size_t>(i - 1)];
}

int Molecule::bond_order(int i, int j) const {
  const auto &nbrs = neighbors(i);
  check_index(j);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), j);
  if (it == nbrs.end() || *it != j)
    return 0;
  return adjacency_orders_[static_cast<std::size_t>(i - 1)]
                          [static_cast<std::size_t>(it - nbrs.begin())];
}

int Molecule::valence(int i) const {
  check_index(i);
  const auto &orders = adjacency_orders_[static_cast<std::size_t>(i - 1)];
  return std::accumulate(orders.begin(), orders.end(), 0);
}

double Molecule::distance(int i, int j) const {
  const auto &p = atom(i).position;
  const auto &q = atom(j).position;
  const double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

int Molecule::total_formal_charge() const {
  int total = 0;
  for (const auto &a : atoms_)
    total += a.formal_charge;
  return total;
}

Molecule Molecule::with_bonds(std::vector<Bond> bonds) const {
  return Molecule(atoms_, std::move(bonds), name_);
}

Molecule Molecule::with_formal_charges(const std::vector<int> &charges) const {
  if (charges.size() != atoms_.size())
    throw Error(ErrorKind::kIndex, "charge vector length mismatch");
  Molecule copy = *this;
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    copy.atoms_[i].formal_charge = charges[i];
  return copy;
}

std::vector<int> neighbors(const Molecule &mol, int i) {
  return mol.neighbors(i);
}

double distance(const Molecule &mol, int i, int j) {
  return mol.distance(i, j);
}

int total_formal_charge(const Molecule &mol) {
  return mol.total_formal_charge();
}

std::vector<std::vector<int>> connected_components(const Molecule &mol) {
  return connected_components(mol, {});
}

std::vector<std::vector<int>>
connected_components(const Molecule &mol,
                     const std::vector<std::pair<int, int>> &removed) {
  std::set<std::pair<int, int>> cut;
  for (auto [i, j] : removed)
    cut.insert(bond_key(i, j));

  const int n = static_cast<int>(mol.size());
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> components;
  std::vector<int> stack;
  for (int seed = 1; seed <= n; ++seed) {
    if (label[static_cast<std::size_t>(seed)] != 0)
      continue;
    components.emplace_back();
    const int id = static_cast<int>(components.size());
    label[static_cast<std::size_t>(seed)] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      components.back().push_back(i);
      for (int j : mol.neighbors(i)) {
        if (label[static_cast<std::size_t>(j)] != 0 ||
            cut.count(bond_key(i, j)) != 0)
          continue;
        label[static_cast<std::size_t>(j)] = id;
        stack.push_back(j);
      }
    }
    std::sort(components.back().begin(), components.back().end());
  }
  return components;
}

} // namespace fragit
