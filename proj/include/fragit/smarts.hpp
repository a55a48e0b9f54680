//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_SMARTS_HPP
#define FRAGIT_SMARTS_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fragit/molecule.hpp"

namespace fragit {

struct SmartsPattern;

struct AtomPrimitive {
  enum class Kind { kElement, kWildcard, kHydrogenCount, kCharge, kRecursive };

  Kind kind = Kind::kWildcard;
  int value = 0; // atomic number, H count or signed charge
  std::shared_ptr<const SmartsPattern> recursive;

  friend bool operator==(const AtomPrimitive &x, const AtomPrimitive &y);
};

// Implicit AND of its primitives.
struct AtomExpr {
  std::vector<AtomPrimitive> primitives;

  friend bool operator==(const AtomExpr &, const AtomExpr &) = default;
};

enum class BondKind { kDefault, kSingle, kDouble, kTriple };

struct PatternBond {
  int i = 0; // pattern-atom ordinals, 0-based, i < j
  int j = 0;
  BondKind kind = BondKind::kDefault;

  friend bool operator==(const PatternBond &, const PatternBond &) = default;
};

struct RingClosure {
  int digit = 0;
  int opener = 0;
  int closer = 0;

  friend bool operator==(const RingClosure &, const RingClosure &) = default;
};

// One ring-digit occurrence as written after an atom.
struct RingToken {
  int digit = 0;
  BondKind written = BondKind::kDefault;

  friend bool operator==(const RingToken &, const RingToken &) = default;
};

struct SmartsPattern {
  std::vector<AtomExpr> atoms;
  std::vector<PatternBond> bonds;
  std::vector<RingClosure> ring_closures;
  // Spanning-tree parent of each atom (-1 for the first) and the ring digits
  // written after it; together these let unparse() reproduce the layout.
  std::vector<int> parent;
  std::vector<std::vector<RingToken>> ring_tokens;
  std::string source;

  std::size_t size() const noexcept { return atoms.size(); }

  // Structural equality; `source` is ignored.
  friend bool operator==(const SmartsPattern &x, const SmartsPattern &y) {
    return x.atoms == y.atoms && x.bonds == y.bonds &&
           x.ring_closures == y.ring_closures && x.parent == y.parent &&
           x.ring_tokens == y.ring_tokens;
  }
};

struct Match {
  std::vector<int> mapping; // pattern ordinal -> 1-based atom index

  friend bool operator==(const Match &, const Match &) = default;
  friend auto operator<=>(const Match &, const Match &) = default;
};

// Throws kUnsupportedFeature for tokens outside the subset and kPattern for
// syntax errors; both quote the byte offset.
SmartsPattern parse_smarts(std::string_view text);

// Canonical text for a parsed pattern; parse_smarts(unparse_smarts(p)) == p.
std::string unparse_smarts(const SmartsPattern &pattern);

// Does the order-`order` bond satisfy the pattern bond?
bool bond_kind_matches(BondKind kind, int order);

// Every injective mapping, sorted lexicographically.
std::vector<Match> match_all(const Molecule &mol, const SmartsPattern &pattern);

// Top-level images of every match, deduplicated, in match order.
std::vector<std::vector<int>> match_first_atoms(const Molecule &mol,
                                                const SmartsPattern &pattern);

} // namespace fragit

#endif // FRAGIT_SMARTS_HPP
