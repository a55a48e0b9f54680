//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_MOLECULE_HPP
#define FRAGIT_MOLECULE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace fragit {

using Vec3 = std::array<double, 3>;

// Atom indices are 1-based everywhere in the public API.
struct Atom {
  int index = 0;
  int element = 0;
  Vec3 position{0.0, 0.0, 0.0};
  int formal_charge = 0;
  int attached_hydrogens = 0; // maintained by Molecule
  std::string name;           // PDB atom name, may be empty
  std::string residue_label;  // e.g. "GLY 1", may be empty
  std::string chain_label;

  friend bool operator==(const Atom &, const Atom &) = default;
};

struct Bond {
  int a = 0;
  int b = 0;
  int order = 1;

  friend bool operator==(const Bond &, const Bond &) = default;
  friend auto operator<=>(const Bond &x, const Bond &y) {
    return std::pair(x.a, x.b) <=> std::pair(y.a, y.b);
  }
};

// Order-insensitive key for an atom pair, smaller index first.
inline std::pair<int, int> bond_key(int i, int j) {
  return i < j ? std::pair(i, j) : std::pair(j, i);
}

class Molecule {
public:
  Molecule() = default;

  // Atoms are re-indexed 1..N in the given order. Bonds are normalised to
  // a < b and sorted; duplicates, self-loops, dangling endpoints and orders
  // outside 1..3 throw.
  Molecule(std::vector<Atom> atoms, std::vector<Bond> bonds,
           std::string name = {});

  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const std::string &name() const noexcept { return name_; }

  const std::vector<Atom> &atoms() const noexcept { return atoms_; }
  const std::vector<Bond> &bonds() const noexcept { return bonds_; }
  const Atom &atom(int i) const;

  // Ascending neighbour indices of atom i.
  const std::vector<int> &neighbors(int i) const;

  // 0 when i and j are not bonded.
  int bond_order(int i, int j) const;
  bool bonded(int i, int j) const { return bond_order(i, j) != 0; }

  // Sum of bond orders at atom i, explicit hydrogens included.
  int valence(int i) const;

  double distance(int i, int j) const;
  int total_formal_charge() const;

  Molecule with_bonds(std::vector<Bond> bonds) const;
  Molecule with_formal_charges(const std::vector<int> &charges) const;

  friend bool operator==(const Molecule &x, const Molecule &y) {
    return x.atoms_ == y.atoms_ && x.bonds_ == y.bonds_;
  }

private:
  void check_index(int i) const;

  std::string name_;
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> adjacency_orders_;
};

std::vector<int> neighbors(const Molecule &mol, int i);
double distance(const Molecule &mol, int i, int j);
int total_formal_charge(const Molecule &mol);

// Components ordered by minimum atom index; each component ascending.
std::vector<std::vector<int>> connected_components(const Molecule &mol);

// As above, with the listed bonds treated as absent.
std::vector<std::vector<int>>
connected_components(const Molecule &mol,
                     const std::vector<std::pair<int, int>> &removed);

} // namespace fragit

#endif // FRAGIT_MOLECULE_HPP
