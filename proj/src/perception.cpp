//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/perception.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <unordered_map>

#include "fragit/elements.hpp"
#include "fragit/error.hpp"

namespace fragit {
namespace {

struct CellKey {
  long x, y, z;
  bool operator==(const CellKey &) const = default;
};

struct CellHash {
  std::size_t operator()(const CellKey &k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.x) * 73856093u;
    h ^= static_cast<std::size_t>(k.y) * 19349663u;
    h ^= static_cast<std::size_t>(k.z) * 83492791u;
    return h;
  }
};

int deficit_for(int element, int sum) {
  for (int v : allowed_valences(element)) {
    if (v >= sum)
      return v - sum;
  }
  return 0;
}

// Mutable bond-order state used while assigning orders.
class OrderState {
public:
  explicit OrderState(const Molecule &mol)
      : mol_(mol), orders_(mol.bonds().size()),
        sums_(mol.size() + 1, 0) {
    for (std::size_t k = 0; k < mol.bonds().size(); ++k) {
      const auto &b = mol.bonds()[k];
      orders_[k] = b.order;
      sums_[static_cast<std::size_t>(b.a)] += b.order;
      sums_[static_cast<std::size_t>(b.b)] += b.order;
      index_[{b.a, b.b}] = k;
    }
  }

  int deficit(int i) const {
    return deficit_for(mol_.atom(i).element, sums_[static_cast<std::size_t>(i)]);
  }
  int sum(int i) const { return sums_[static_cast<std::size_t>(i)]; }
  int order(int i, int j) const { return orders_[index_.at(bond_key(i, j))]; }

  void bump(int i, int j, int delta) {
    orders_[index_.at(bond_key(i, j))] += delta;
    sums_[static_cast<std::size_t>(i)] += delta;
    sums_[static_cast<std::size_t>(j)] += delta;
  }

  std::vector<Bond> bonds() const {
    std::vector<Bond> out = mol_.bonds();
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k].order = orders_[k];
    return out;
  }

  const Molecule &mol() const { return mol_; }

private:
  const Molecule &mol_;
  std::vector<int> orders_;
  std::vector<int> sums_;
  std::map<std::pair<int, int>, std::size_t> index_;
};

bool conjugable(const Molecule &mol, int i) {
  const int z = mol.atom(i).element;
  return z != 1 && !allowed_valences(z).empty();
}

// Depth-first search for an alternating path from `from` whose next step
// raises a bond (raise == true) or lowers one. Ends at an atom other than
// the start that still has a deficit, arrived at through a raise.
bool augment(OrderState &st, int start, int from, bool raise,
             std::vector<char> &on_path, std::vector<std::pair<int, int>> &path,
             int &budget) {
  if (--budget < 0)
    return false;
  const Molecule &mol = st.mol();
  for (int next : mol.neighbors(from)) {
    if (on_path[static_cast<std::size_t>(next)] || !conjugable(mol, next))
      continue;
    const int order = st.order(from, next);
    if (raise ? order >= 3 : order <= 1)
      continue;
    path.emplace_back(from, next);
    on_path[static_cast<std::size_t>(next)] = 1;
    if (raise && next != start && st.deficit(next) > 0)
      return true;
    if (augment(st, start, next, !raise, on_path, path, budget))
      return true;
    on_path[static_cast<std::size_t>(next)] = 0;
    path.pop_back();
  }
  return false;
}

} // namespace

std::vector<Bond> perceive_bonds(const std::vector<Atom> &atoms) {
  std::vector<double> radius(atoms.size());
  double max_radius = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    auto r = covalent_radius(atoms[i].element);
    if (!r)
      throw Error(ErrorKind::kUnsupportedElement,
                  "element " + element_symbol(atoms[i].element) + " (Z=" +
                      std::to_string(atoms[i].element) + ") at atom " +
                      std::to_string(i + 1) + " has no covalent radius");
    radius[i] = *r;
    max_radius = std::max(max_radius, *r);
  }
  const double cell = 2.0 * max_radius + kBondTolerance;
  auto key_of = [cell](const Vec3 &p) {
    return CellKey{static_cast<long>(std::floor(p[0] / cell)),
                   static_cast<long>(std::floor(p[1] / cell)),
                   static_cast<long>(std::floor(p[2] / cell))};
  };

  std::unordered_map<CellKey, std::vector<int>, CellHash> grid;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    grid[key_of(atoms[i].position)].push_back(static_cast<int>(i));

  std::vector<Bond> bonds;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const auto &p = atoms[i].position;
    const CellKey home = key_of(p);
    for (long dx = -1; dx <= 1; ++dx)
      for (long dy = -1; dy <= 1; ++dy)
        for (long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({home.x + dx, home.y + dy, home.z + dz});
          if (it == grid.end())
            continue;
          for (int j : it->second) {
            if (static_cast<std::size_t>(j) <= i)
              continue;
            const auto &q = atoms[static_cast<std::size_t>(j)].position;
            const double d = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
            if (d > kMinBondLength &&
                d <= radius[i] + radius[static_cast<std::size_t>(j)] +
                         kBondTolerance)
              bonds.push_back({static_cast<int>(i) + 1, j + 1, 1});
          }
        }
  }
  std::sort(bonds.begin(), bonds.end());
  return bonds;
}

int valence_deficit(const Molecule &mol, int i) {
  return deficit_for(mol.atom(i).element, mol.valence(i));
}

Molecule perceive_bond_orders(const Molecule &mol) {
  OrderState st(mol);

  // Greedy: shortest bond between two deficit atoms first. Deficits only
  // shrink, so one ordered sweep equals repeated global selection.
  std::vector<std::tuple<double, int, int>> order;
  for (const auto &b : mol.bonds())
    order.emplace_back(mol.distance(b.a, b.b), b.a, b.b);
  std::sort(order.begin(), order.end());
  for (const auto &[len, a, b] : order) {
    while (st.order(a, b) < 3 && st.deficit(a) > 0 && st.deficit(b) > 0)
      st.bump(a, b, 1);
  }

  // Augmenting alternating paths repair greedy Kekule dead ends.
  const int n = static_cast<int>(mol.size());
  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 1; i <= n; ++i) {
      if (st.deficit(i) == 0 || !conjugable(mol, i))
        continue;
      std::vector<char> on_path(static_cast<std::size_t>(n) + 1, 0);
      on_path[static_cast<std::size_t>(i)] = 1;
      std::vector<std::pair<int, int>> path;
      int budget = 20000;
      if (augment(st, i, i, true, on_path, path, budget)) {
        int delta = 1;
        for (auto [x, y] : path) {
          st.bump(x, y, delta);
          delta = -delta;
        }
        improved = true;
      }
    }
  }

  // A C or O left short may borrow from a neutral three-valent N, which
  // becomes N+ (guanidinium, imidazolium, nitro).
  for (int i = 1; i <= n; ++i) {
    const int z = mol.atom(i).element;
    if (z != 6 && z != 8)
      continue;
    while (st.deficit(i) > 0) {
      int best = 0;
      double best_len = 0.0;
      for (int j : mol.neighbors(i)) {
        if (mol.atom(j).element != 7 || st.sum(j) != 3 || st.order(i, j) >= 3)
          continue;
        const double len = mol.distance(i, j);
        if (best == 0 || len < best_len) {
          best = j;
          best_len = len;
        }
      }
      if (best == 0)
        break;
      st.bump(i, best, 1);
    }
  }

  return mol.with_bonds(st.bonds());
}

Molecule assign_formal_charges(const Molecule &mol) {
  std::vector<int> charges;
  charges.reserve(mol.size());
  for (const auto &atom : mol.atoms()) {
    int q = atom.formal_charge;
    if (atom.element == 7 || atom.element == 8) {
      const int standard = atom.element == 7 ? 3 : 2;
      q = mol.valence(atom.index) - standard;
      if (q < -1 || q > 1)
        throw Error(ErrorKind::kPerception,
                    "atom " + std::to_string(atom.index) + " (" +
                        element_symbol(atom.element) + ") would carry charge " +
                        std::to_string(q) +
                        "; structure is mis-protonated or corrupt");
    }
    charges.push_back(q);
  }
  return mol.with_formal_charges(charges);
}

Molecule perceive_orders_and_charges(const Molecule &mol) {
  Molecule ordered = perceive_bond_orders(mol);
  // Charges are only placed on N and O, so an open H or C valence cannot be
  // explained and means missing hydrogens or a broken geometry.
  for (const auto &atom : ordered.atoms()) {
    if ((atom.element == 1 || atom.element == 6) &&
        valence_deficit(ordered, atom.index) > 0)
      throw Error(ErrorKind::kPerception,
                  "atom " + std::to_string(atom.index) + " (" +
                      element_symbol(atom.element) +
                      ") is left with an open valence; structure is "
                      "mis-protonated or corrupt");
  }
  return assign_formal_charges(ordered);
}

Molecule perceive(std::vector<Atom> atoms, std::string name) {
  auto bonds = perceive_bonds(atoms);
  return perceive_orders_and_charges(
      Molecule(std::move(atoms), std::move(bonds), std::move(name)));
}

} // namespace fragit
