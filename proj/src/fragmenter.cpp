//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/fragmenter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fragit/error.hpp"
#include "fragit/patterns.hpp"

namespace fragit {
namespace {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y)
      parent_[std::max(x, y)] = std::min(x, y);
  }

private:
  std::vector<std::size_t> parent_;
};

// Rebuilds a fragmentation after merging fragments that share a set id.
Fragmentation regroup(const Fragmentation &f, DisjointSets &sets) {
  std::map<std::size_t, std::vector<int>> atoms;
  std::map<std::size_t, int> charge;
  for (std::size_t k = 0; k < f.fragments.size(); ++k) {
    const auto root = sets.find(k);
    auto &bucket = atoms[root];
    bucket.insert(bucket.end(), f.fragments[k].begin(), f.fragments[k].end());
    charge[root] += f.charges[k];
  }
  Fragmentation out;
  std::vector<std::pair<std::vector<int>, int>> merged;
  for (auto &[root, list] : atoms) {
    std::sort(list.begin(), list.end());
    merged.emplace_back(std::move(list), charge[root]);
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto &x, const auto &y) { return x.first[0] < y.first[0]; });
  for (auto &[list, q] : merged) {
    out.fragments.push_back(std::move(list));
    out.charges.push_back(q);
  }

  std::size_t atom_count = 0;
  for (const auto &frag : f.fragments)
    for (int a : frag)
      atom_count = std::max(atom_count, static_cast<std::size_t>(a));
  const auto member = out.membership(atom_count);
  for (const auto &cut : f.cut_bonds) {
    if (member[static_cast<std::size_t>(cut.a)] !=
        member[static_cast<std::size_t>(cut.b)])
      out.cut_bonds.push_back(cut);
  }
  out.protected_atoms = f.protected_atoms;
  out.warnings = f.warnings;
  return out;
}

} // namespace

std::size_t Fragmentation::min_size() const {
  std::size_t best = 0;
  for (const auto &frag : fragments)
    best = best == 0 ? frag.size() : std::min(best, frag.size());
  return best;
}

std::size_t Fragmentation::max_size() const {
  std::size_t best = 0;
  for (const auto &frag : fragments)
    best = std::max(best, frag.size());
  return best;
}

std::vector<int> Fragmentation::membership(std::size_t atom_count) const {
  std::vector<int> member(atom_count + 1, 0);
  for (std::size_t k = 0; k < fragments.size(); ++k) {
    for (int a : fragments[k]) {
      if (a >= 1 && static_cast<std::size_t>(a) <= atom_count)
        member[static_cast<std::size_t>(a)] = static_cast<int>(k) + 1;
    }
  }
  return member;
}

SmartsPattern compile_pattern(const NamedPattern &pattern) {
  try {
    return parse_smarts(pattern.smarts);
  } catch (const Error &e) {
    throw Error(e.kind(), "pattern '" + pattern.name + "': " + e.what());
  }
}

std::vector<int> locate_protected_atoms(const Molecule &mol,
                                        const PatternSet &patterns) {
  std::set<int> atoms;
  for (const auto &named : patterns.protection) {
    const auto pattern = compile_pattern(named);
    for (const auto &m : match_all(mol, pattern))
      atoms.insert(m.mapping.begin(), m.mapping.end());
  }
  return {atoms.begin(), atoms.end()};
}

std::vector<CutBond> locate_cut_bonds(const Molecule &mol,
                                      const PatternSet &patterns,
                                      const std::vector<int> &protected_atoms,
                                      const ExplicitPairs &explicit_pairs) {
  const std::set<int> shielded(protected_atoms.begin(), protected_atoms.end());
  std::set<std::pair<int, int>> seen;
  std::vector<CutBond> cuts;
  for (const auto &named : patterns.fragmentation) {
    const auto pattern = compile_pattern(named);
    if (pattern.size() < 2)
      throw Error(ErrorKind::kPattern,
                  "pattern '" + named.name +
                      "' needs at least two top-level atoms to define a cut");
    for (const auto &m : match_all(mol, pattern)) {
      const int a = m.mapping[0];
      const int b = m.mapping[1];
      if (shielded.count(a) != 0 || shielded.count(b) != 0)
        continue;
      if (seen.insert(bond_key(a, b)).second)
        cuts.push_back({a, b, named.name});
    }
  }
  for (auto [a, b] : explicit_pairs) {
    const int n = static_cast<int>(mol.size());
    if (a == b || a < 1 || b < 1 || a > n || b > n || !mol.bonded(a, b))
      throw Error(ErrorKind::kInvalidPair,
                  "explicit pair " + std::to_string(a) + "," +
                      std::to_string(b) + " is not a bond of the molecule");
    if (seen.insert(bond_key(a, b)).second)
      cuts.push_back({a, b, kExplicitProvenance});
  }
  return cuts;
}

std::vector<int>
assign_fragment_charges(const Molecule &mol,
                        const std::vector<std::vector<int>> &fragments) {
  std::vector<int> charges;
  charges.reserve(fragments.size());
  for (const auto &frag : fragments) {
    int q = 0;
    for (int a : frag)
      q += mol.atom(a).formal_charge;
    charges.push_back(q);
  }
  return charges;
}

Fragmentation build_fragments(const Molecule &mol,
                              const std::vector<CutBond> &cuts) {
  std::vector<std::pair<int, int>> removed;
  removed.reserve(cuts.size());
  for (const auto &cut : cuts)
    removed.emplace_back(cut.a, cut.b);

  Fragmentation f;
  f.fragments = connected_components(mol, removed);
  f.charges = assign_fragment_charges(mol, f.fragments);
  const auto member = f.membership(mol.size());
  for (const auto &cut : cuts) {
    if (member[static_cast<std::size_t>(cut.a)] ==
        member[static_cast<std::size_t>(cut.b)]) {
      f.warnings.push_back("cut " + std::to_string(cut.a) + "-" +
                           std::to_string(cut.b) + " (" + cut.provenance +
                           ") does not separate the structure; discarded");
      continue;
    }
    f.cut_bonds.push_back(cut);
  }
  return f;
}

Fragmentation group_fragments(const Fragmentation &f, int n) {
  if (n < 1)
    throw Error(ErrorKind::kConfig,
                "group size must be at least 1, got " + std::to_string(n));
  if (n == 1)
    return f;

  const std::size_t count = f.fragments.size();
  std::size_t atom_count = 0;
  for (const auto &frag : f.fragments)
    atom_count = std::max(atom_count, static_cast<std::size_t>(frag.back()));
  const auto member = f.membership(atom_count);
  std::vector<std::set<std::size_t>> linked(count);
  for (const auto &cut : f.cut_bonds) {
    const auto x = static_cast<std::size_t>(member[static_cast<std::size_t>(cut.a)] - 1);
    const auto y = static_cast<std::size_t>(member[static_cast<std::size_t>(cut.b)] - 1);
    linked[x].insert(y);
    linked[y].insert(x);
  }

  // Walk the cut-bond graph; each walk is a chain, split into runs of n.
  DisjointSets sets(count);
  std::vector<char> visited(count, 0);
  for (std::size_t start = 0; start < count; ++start) {
    if (visited[start])
      continue;
    std::vector<std::size_t> chain;
    std::size_t current = start;
    for (;;) {
      visited[current] = 1;
      chain.push_back(current);
      auto next = std::find_if(linked[current].begin(), linked[current].end(),
                               [&](std::size_t k) { return !visited[k]; });
      if (next == linked[current].end())
        break;
      current = *next;
    }
    for (std::size_t k = 0; k < chain.size(); ++k)
      sets.unite(chain[k], chain[k - k % static_cast<std::size_t>(n)]);
  }
  return regroup(f, sets);
}

Fragmentation merge_glycine(const Molecule &mol, const Fragmentation &f,
                            const std::string &glycine_pattern) {
  const auto pattern = compile_pattern({"glycine", glycine_pattern});
  if (pattern.size() < 2)
    throw Error(ErrorKind::kPattern,
                "glycine pattern needs an amide N and its acyl carbon");
  const auto member = f.membership(mol.size());
  auto frag_of = [&](int atom) {
    return static_cast<std::size_t>(member[static_cast<std::size_t>(atom)] - 1);
  };

  DisjointSets sets(f.fragments.size());
  for (const auto &m : match_all(mol, pattern)) {
    const int nitrogen = m.mapping[0];
    const int acyl = m.mapping[1];
    const auto home = frag_of(nitrogen);
    if (frag_of(acyl) != home) {
      sets.unite(home, frag_of(acyl));
      continue;
    }
    for (const auto &cut : f.cut_bonds) {
      if (cut.a == acyl && frag_of(cut.b) != home)
        sets.unite(home, frag_of(cut.b));
      else if (cut.b == acyl && frag_of(cut.a) != home)
        sets.unite(home, frag_of(cut.a));
    }
  }
  return regroup(f, sets);
}

PatternSet effective_patterns(const JobSettings &settings) {
  return settings.pattern_overrides ? *settings.pattern_overrides
                                    : builtin_patterns();
}

Fragmentation fragment(const Molecule &mol, const JobSettings &settings) {
  const PatternSet patterns = effective_patterns(settings);
  std::vector<int> shielded;
  if (settings.use_protection)
    shielded = locate_protected_atoms(mol, patterns);
  const auto cuts =
      locate_cut_bonds(mol, patterns, shielded, settings.explicit_pairs);
  Fragmentation f = build_fragments(mol, cuts);
  f.protected_atoms = shielded;
  if (settings.merge_glycine)
    f = merge_glycine(mol, f, patterns.glycine);
  return group_fragments(f, settings.group_size);
}

} // namespace fragit
