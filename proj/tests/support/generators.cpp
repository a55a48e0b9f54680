//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "fragit/elements.hpp"
#include "fragit/patterns.hpp"

namespace gen {

using fragit::Atom;
using fragit::Bond;
using fragit::Molecule;

int uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double uniform_real(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool chance(Rng &rng, double p) { return uniform_real(rng, 0.0, 1.0) < p; }

namespace {

int random_element(Rng &rng) {
  static constexpr int kPool[] = {6, 6, 6, 6, 7, 7, 8, 8, 16, 1, 1, 1, 1};
  return kPool[uniform(rng, 0, static_cast<int>(std::size(kPool)) - 1)];
}

fragit::Vec3 random_point(Rng &rng, double half) {
  return {uniform_real(rng, -half, half), uniform_real(rng, -half, half),
          uniform_real(rng, -half, half)};
}

int random_order(Rng &rng) {
  const double r = uniform_real(rng, 0.0, 1.0);
  return r < 0.7 ? 1 : r < 0.9 ? 2 : 3;
}

} // namespace

Molecule random_graph(Rng &rng, int min_atoms, int max_atoms) {
  const int n = uniform(rng, min_atoms, max_atoms);
  std::vector<Atom> atoms(static_cast<std::size_t>(n));
  for (auto &a : atoms) {
    a.element = random_element(rng);
    a.position = random_point(rng, 6.0);
    if (chance(rng, 0.15))
      a.formal_charge = chance(rng, 0.5) ? 1 : -1;
  }
  std::set<std::pair<int, int>> seen;
  std::vector<Bond> bonds;
  for (int i = 2; i <= n; ++i) {
    const int j = uniform(rng, 1, i - 1);
    seen.insert({j, i});
    bonds.push_back({j, i, random_order(rng)});
  }
  const int extra = uniform(rng, 0, n / 3);
  for (int k = 0; k < extra; ++k) {
    const int i = uniform(rng, 1, n);
    const int j = uniform(rng, 1, n);
    if (i == j || seen.count(fragit::bond_key(i, j)))
      continue;
    seen.insert(fragit::bond_key(i, j));
    bonds.push_back({i, j, random_order(rng)});
  }
  return Molecule(std::move(atoms), std::move(bonds), "random");
}

std::vector<Atom> random_cloud(Rng &rng, int min_atoms, int max_atoms) {
  const int n = uniform(rng, min_atoms, max_atoms);
  const double half = 1.2 * std::cbrt(static_cast<double>(n));
  std::vector<Atom> atoms(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    atoms[i].index = static_cast<int>(i) + 1;
    atoms[i].element = random_element(rng);
    atoms[i].position = random_point(rng, half);
  }
  return atoms;
}

namespace {

struct Builder {
  Rng &rng;
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;
  double x = 0.0;

  int add(int z, const char *name, int charge = 0) {
    Atom a;
    a.element = z;
    a.name = name;
    a.formal_charge = charge;
    a.position = {x + uniform_real(rng, -1.2, 1.2), uniform_real(rng, -1.2, 1.2),
                  uniform_real(rng, -1.2, 1.2)};
    atoms.push_back(a);
    return static_cast<int>(atoms.size());
  }
  void bond(int a, int b, int order = 1) { bonds.push_back({a, b, order}); }
  void hydrogens(int heavy, int count) {
    for (int k = 0; k < count; ++k)
      bond(heavy, add(1, "H"));
  }
};

} // namespace

Molecule random_peptide(Rng &rng, int min_residues, int max_residues) {
  static constexpr char kResidues[] = {'G', 'A', 'S', 'P'};
  const int n = uniform(rng, min_residues, max_residues);
  const bool charged_n = chance(rng, 0.5);
  const bool charged_c = chance(rng, 0.5);
  Builder b{rng, {}, {}, 0.0};
  int previous_c = 0;
  for (int r = 0; r < n; ++r) {
    const char kind = kResidues[uniform(rng, 0, 3)];
    b.x = 3.8 * r;
    const bool first = r == 0;
    const bool pro = kind == 'P';
    int n_h = pro ? 0 : 1;
    int n_charge = 0;
    if (first) {
      n_h += charged_n ? 2 : 1;
      n_charge = charged_n ? 1 : 0;
    }
    const int N = b.add(7, "N", n_charge);
    b.hydrogens(N, n_h);
    if (previous_c)
      b.bond(previous_c, N);
    const int CA = b.add(6, "CA");
    b.bond(N, CA);
    if (kind == 'G') {
      b.hydrogens(CA, 2);
    } else {
      b.hydrogens(CA, 1);
      const int CB = b.add(6, "CB");
      b.bond(CA, CB);
      if (kind == 'A') {
        b.hydrogens(CB, 3);
      } else if (kind == 'S') {
        b.hydrogens(CB, 2);
        const int OG = b.add(8, "OG");
        b.bond(CB, OG);
        b.hydrogens(OG, 1);
      } else {
        b.hydrogens(CB, 2);
        const int CG = b.add(6, "CG");
        b.bond(CB, CG);
        b.hydrogens(CG, 2);
        const int CD = b.add(6, "CD");
        b.bond(CG, CD);
        b.hydrogens(CD, 2);
        b.bond(CD, N);
      }
    }
    const int C = b.add(6, "C");
    b.bond(CA, C);
    b.bond(C, b.add(8, "O"), 2);
    previous_c = C;
  }
  const int OXT = b.add(8, "OXT", charged_c ? -1 : 0);
  b.bond(previous_c, OXT);
  if (!charged_c)
    b.hydrogens(OXT, 1);
  return Molecule(std::move(b.atoms), std::move(b.bonds), "peptide");
}

namespace {

std::string random_atom_token(Rng &rng, int depth) {
  static const char *kBare[] = {"C", "N", "O", "S", "*", "CH2", "CH3", "NH2",
                                "OH", "C", "C", "N", "O"};
  static const char *kBracket[] = {"[C]",  "[CH2]", "[CH3]", "[N+]", "[NH3+]",
                                   "[O-]", "[OH]",  "[*]",   "[S]",  "[H]",
                                   "[NH]", "[CH]",  "[H2]",  "[C+0]", "[O--]"};
  const double r = uniform_real(rng, 0.0, 1.0);
  if (depth > 0 && r < 0.2) {
    std::string head = chance(rng, 0.4) ? std::string(1, "CNO"[uniform(rng, 0, 2)])
                                        : std::string();
    std::string token = "[" + head + "$(" + random_smarts(rng, 3, depth - 1) + ")";
    if (chance(rng, 0.2))
      token += "$(" + random_smarts(rng, 2, depth - 1) + ")";
    return token + "]";
  }
  if (r < 0.6)
    return kBare[uniform(rng, 0, static_cast<int>(std::size(kBare)) - 1)];
  return kBracket[uniform(rng, 0, static_cast<int>(std::size(kBracket)) - 1)];
}

std::string random_bond(Rng &rng) {
  const double r = uniform_real(rng, 0.0, 1.0);
  return r < 0.65 ? "" : r < 0.8 ? "-" : r < 0.95 ? "=" : "#";
}

// Writes a chain of `count` atoms. Branches are chains of one or two atoms.
void chain(Rng &rng, std::string &out, int count, int depth, bool allow_ring) {
  int ring_open_at = -1;
  for (int k = 0; k < count; ++k) {
    if (k > 0)
      out += random_bond(rng);
    std::string token = random_atom_token(rng, depth);
    // A ring digit straight after "NH2" or "OH" would read as a hydrogen
    // count, so those take the bracket form.
    auto ring_safe = [](std::string t) {
      return t.front() != '[' && t.find('H') != std::string::npos ? "[" + t + "]" : t;
    };
    if (allow_ring && ring_open_at < 0 && k + 2 < count && chance(rng, 0.2)) {
      out += ring_safe(token) + "1";
      ring_open_at = k;
    } else if (ring_open_at >= 0 && k == count - 1) {
      out += ring_safe(token) + random_bond(rng) + "1";
    } else {
      out += token;
    }
    if (k + 1 < count && chance(rng, 0.25)) {
      out += "(" + random_bond(rng);
      chain(rng, out, uniform(rng, 1, 2), depth, false);
      out += ")";
    }
  }
}

} // namespace

std::string random_smarts(Rng &rng, int max_atoms, int depth) {
  std::string out;
  chain(rng, out, uniform(rng, 1, std::max(1, max_atoms)), depth, true);
  return out;
}

std::string subgraph_smarts(Rng &rng, const Molecule &mol, int max_atoms) {
  const int n = static_cast<int>(mol.size());
  const int want = uniform(rng, 1, max_atoms);
  std::vector<int> chosen = {uniform(rng, 1, n)};
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(n) + 1);
  while (static_cast<int>(chosen.size()) < want) {
    std::vector<std::pair<int, int>> frontier;
    for (int a : chosen)
      for (int b : mol.neighbors(a))
        if (std::find(chosen.begin(), chosen.end(), b) == chosen.end())
          frontier.emplace_back(a, b);
    if (frontier.empty())
      break;
    const auto [from, to] =
        frontier[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(frontier.size()) - 1))];
    if (std::find(chosen.begin(), chosen.end(), to) != chosen.end())
      continue;
    chosen.push_back(to);
    parent[static_cast<std::size_t>(to)] = from;
    children[static_cast<std::size_t>(from)].push_back(to);
  }
  auto token = [&](int a) {
    if (chance(rng, 0.15))
      return std::string("*");
    std::string t = "[" + fragit::element_symbol(mol.atom(a).element);
    const int q = mol.atom(a).formal_charge;
    if (q != 0 && chance(rng, 0.7))
      t += q > 0 ? "+" : "-";
    return t + "]";
  };
  auto bond = [&](int a, int b) {
    const int order = mol.bond_order(a, b);
    return order == 2 ? std::string("=") : order == 3 ? std::string("#")
                                         : chance(rng, 0.3) ? std::string("-")
                                                            : std::string();
  };
  std::function<std::string(int)> write = [&](int a) {
    std::string out = token(a);
    const auto &kids = children[static_cast<std::size_t>(a)];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const std::string sub = bond(a, kids[k]) + write(kids[k]);
      out += k + 1 < kids.size() ? "(" + sub + ")" : sub;
    }
    return out;
  };
  return write(chosen.front());
}

std::vector<fragit::CutBond> random_cuts(Rng &rng, const Molecule &mol,
                                         double p) {
  std::vector<fragit::CutBond> cuts;
  for (const auto &b : mol.bonds())
    if (chance(rng, p))
      cuts.push_back({b.a, b.b, "random"});
  return cuts;
}

fragit::JobSettings random_settings(Rng &rng) {
  fragit::JobSettings s;
  s.use_protection = chance(rng, 0.5);
  s.group_size = uniform(rng, 1, 4);
  s.merge_glycine = chance(rng, 0.5);
  if (chance(rng, 0.5)) {
    s.central_fragment = uniform(rng, 1, 50);
    s.boundary_distance = uniform_real(rng, 0.05, 10.0);
    if (chance(rng, 0.5)) {
      s.active_distance = uniform_real(rng, 0.05, 5.0);
      s.buffer_distance = uniform_real(rng, 0.05, 5.0);
    }
  }
  if (chance(rng, 0.5)) {
    fragit::PatternSet p = fragit::builtin_patterns();
    if (chance(rng, 0.5))
      p.fragmentation.push_back({"extra" + std::to_string(uniform(rng, 0, 99)),
                                 random_smarts(rng, 3, 1)});
    if (chance(rng, 0.3))
      p.protection.clear();
    if (chance(rng, 0.3))
      p.glycine = random_smarts(rng, 2, 1);
    s.pattern_overrides = p;
  }
  const int pairs = uniform(rng, 0, 4);
  for (int k = 0; k < pairs; ++k) {
    const int a = uniform(rng, 1, 200);
    s.explicit_pairs.push_back({a, a + uniform(rng, 1, 5)});
  }
  s.emit_pymol = chance(rng, 0.5);
  s.emit_jmol = chance(rng, 0.5);
  static const char *kScf[] = {"RHF", "ROHF", "UHF"};
  static const char *kBasis[] = {"STO-3G", "3-21G", "6-31G", "6-311G"};
  s.gamess.scf_type = kScf[uniform(rng, 0, 2)];
  s.gamess.basis = kBasis[uniform(rng, 0, 3)];
  s.gamess.memory_per_core = uniform(rng, 8, 64000);
  s.gamess.run_type = chance(rng, 0.5) ? "energy" : "optimize";
  return s;
}

std::vector<int> random_permutation(Rng &rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Molecule permute(const Molecule &mol, const std::vector<int> &perm) {
  std::vector<Atom> atoms(mol.size());
  for (std::size_t i = 0; i < mol.size(); ++i)
    atoms[static_cast<std::size_t>(perm[i] - 1)] = mol.atoms()[i];
  std::vector<Bond> bonds;
  for (const auto &b : mol.bonds())
    bonds.push_back({perm[static_cast<std::size_t>(b.a - 1)],
                     perm[static_cast<std::size_t>(b.b - 1)], b.order});
  return Molecule(std::move(atoms), std::move(bonds), mol.name());
}

} // namespace gen
