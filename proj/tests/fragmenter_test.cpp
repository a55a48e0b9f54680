//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <set>

#include "fragit/error.hpp"
#include "fragit/fragmenter.hpp"
#include "fragit/patterns.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using fragit::Fragmentation;
using fragit::JobSettings;
using fragit::Molecule;

Fragmentation run(const std::string &file, JobSettings s = {}) {
  return fragit::fragment(fixtures::load(file), s);
}

JobSettings no_protection() {
  JobSettings s;
  s.use_protection = false;
  return s;
}

TEST(Patterns, BuiltinsParse) {
  const auto set = fragit::builtin_patterns();
  EXPECT_EQ(set.fragmentation.size(), 3u);
  EXPECT_EQ(set.protection.size(), 2u);
  for (const auto &p : set.fragmentation)
    EXPECT_NO_THROW(fragit::compile_pattern(p));
  for (const auto &p : set.protection)
    EXPECT_NO_THROW(fragit::compile_pattern(p));
  EXPECT_EQ(set.glycine, fragit::kGlycinePattern);
}

TEST(Patterns, BadPatternNamesItself) {
  try {
    fragit::compile_pattern({"broken", "C(("});
    FAIL();
  } catch (const fragit::Error &e) {
    EXPECT_EQ(e.kind(), fragit::ErrorKind::kPattern);
    EXPECT_NE(std::string(e.what()).find("broken"), std::string::npos);
  }
}

TEST(Protection, CappedAlanineAndWaterHaveNone) {
  const auto set = fragit::builtin_patterns();
  EXPECT_TRUE(fragit::locate_protected_atoms(fixtures::load("ala10_alpha.pdb"), set).empty());
  EXPECT_TRUE(fragit::locate_protected_atoms(fixtures::load("water_trimer.xyz"), set).empty());
}

TEST(Protection, ChignolinNTerminusIsFiveAtoms) {
  const auto &m = fixtures::load("chignolin.pdb");
  const auto prot = fragit::locate_protected_atoms(m, fragit::builtin_patterns());
  ASSERT_EQ(prot.size(), 5u);
  const auto oracle_match =
      oracle::match_all(m, fragit::parse_smarts(fragit::kNh3Protection));
  ASSERT_EQ(oracle_match.size(), 1u);
  std::vector<int> want = oracle_match[0];
  std::sort(want.begin(), want.end());
  EXPECT_EQ(prot, want);
  EXPECT_EQ(m.atom(prot.front()).element, 7);
}

TEST(Cuts, ChignolinHasEight) {
  const auto &m = fixtures::load("chignolin.pdb");
  const auto set = fragit::builtin_patterns();
  const auto prot = fragit::locate_protected_atoms(m, set);
  const auto cuts = fragit::locate_cut_bonds(m, set, prot, {});
  EXPECT_EQ(cuts.size(), 8u);
  for (const auto &c : cuts) {
    EXPECT_TRUE(m.bonded(c.a, c.b));
    EXPECT_EQ(c.provenance, "peptide");
  }
  EXPECT_EQ(fragit::locate_cut_bonds(m, set, {}, {}).size(), 9u);
}

TEST(Cuts, CutsMatchTheOracleBondSet) {
  // Without protection the cut set is exactly the first two atoms of every
  // oracle match of the peptide pattern.
  const auto &m = fixtures::load("trpcage.pdb");
  std::set<std::pair<int, int>> want;
  for (const auto &match :
       oracle::match_all(m, fragit::parse_smarts(fragit::kProteinPattern)))
    want.insert(fragit::bond_key(match[0], match[1]));
  std::set<std::pair<int, int>> got;
  for (const auto &c : fragit::locate_cut_bonds(m, fragit::builtin_patterns(), {}, {}))
    got.insert(fragit::bond_key(c.a, c.b));
  EXPECT_EQ(got, want);
}

TEST(Cuts, CyclodextrinHasSeven) {
  const auto &m = fixtures::load("beta_cyclodextrin.pdb");
  const auto set = fragit::builtin_patterns();
  EXPECT_EQ(fragit::locate_cut_bonds(m, set, fragit::locate_protected_atoms(m, set), {}).size(),
            7u);
}

TEST(Cuts, LeucoemeraldineExplicitPairs) {
  const auto &m = fixtures::load("leucoemeraldine.sdf");
  const auto s = fixtures::settings_for("leucoemeraldine.sdf");
  ASSERT_EQ(s.explicit_pairs.size(), 7u);
  const auto set = fragit::effective_patterns(s);
  const auto cuts = fragit::locate_cut_bonds(m, set, {}, s.explicit_pairs);
  ASSERT_EQ(cuts.size(), 7u);
  for (const auto &c : cuts)
    EXPECT_EQ(c.provenance, fragit::kExplicitProvenance);
}

TEST(Cuts, ExplicitPairMustBeABond) {
  const auto &m = fixtures::load("water_trimer.xyz");
  try {
    fragit::locate_cut_bonds(m, {}, {}, {{1, 4}});
    FAIL();
  } catch (const fragit::Error &e) {
    EXPECT_EQ(e.kind(), fragit::ErrorKind::kInvalidPair);
  }
  EXPECT_THROW(fragit::locate_cut_bonds(m, {}, {}, {{1, 99}}), fragit::Error);
}

TEST(Build, WaterTrimerKeepsThreeMolecules) {
  const auto f = fragit::build_fragments(fixtures::load("water_trimer.xyz"), {});
  EXPECT_EQ(f.size(), 3u);
  EXPECT_TRUE(f.cut_bonds.empty());
  EXPECT_EQ(f.charges, (std::vector<int>{0, 0, 0}));
}

TEST(Build, ChignolinRow) {
  const auto f = run("chignolin.pdb");
  EXPECT_EQ(f.size(), 9u);
  EXPECT_EQ(f.min_size(), 7u);
  EXPECT_EQ(f.max_size(), 28u);
  EXPECT_EQ(f.cut_bonds.size(), 8u);
  int q = 0;
  for (int c : f.charges)
    q += c;
  EXPECT_EQ(q, -2);
}

TEST(Build, RingCutIsDiscardedWithAWarning) {
  const Molecule *ring = nullptr;
  for (const auto &[name, mol] : fixtures::corpus())
    if (name == "cyclohexane")
      ring = &mol;
  ASSERT_NE(ring, nullptr);
  const auto f = fragit::build_fragments(*ring, {{1, 2, "test"}});
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.cut_bonds.empty());
  ASSERT_EQ(f.warnings.size(), 1u);
}

TEST(Charges, NeutralAlanineAndHydronium) {
  const auto f = run("ala20_alpha.pdb");
  EXPECT_EQ(f.charges, std::vector<int>(20, 0));
  fragit::Atom o;
  o.element = 8;
  o.formal_charge = 1;
  fragit::Atom h;
  h.element = 1;
  const Molecule hydronium({o, h, h, h}, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
  EXPECT_EQ(fragit::assign_fragment_charges(hydronium, {{1, 2, 3, 4}}),
            std::vector<int>{1});
}

TEST(Group, OneIsIdentity) {
  const auto f = run("chignolin.pdb");
  EXPECT_EQ(fragit::group_fragments(f, 1), f);
  EXPECT_THROW(fragit::group_fragments(f, 0), fragit::Error);
}

TEST(Group, CyclodextrinPairs) {
  const auto g = fragit::group_fragments(run("beta_cyclodextrin.pdb"), 2);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.max_size(), 42u);
  EXPECT_EQ(g.min_size(), 21u);
}

TEST(Group, ChignolinPairs) {
  JobSettings s;
  s.group_size = 2;
  const auto f = run("chignolin.pdb", s);
  EXPECT_EQ(f.size(), 5u);
  EXPECT_EQ(f.min_size(), 10u);
  EXPECT_EQ(f.max_size(), 40u);
  auto t = no_protection();
  t.group_size = 2;
  const auto g = run("chignolin.pdb", t);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.min_size(), 21u);
  EXPECT_EQ(g.max_size(), 34u);
}

TEST(Merge, ChignolinWithoutProtection) {
  auto s = no_protection();
  s.merge_glycine = true;
  const auto f = run("chignolin.pdb", s);
  EXPECT_EQ(f.size(), 7u);
  EXPECT_EQ(f.min_size(), 7u);
  EXPECT_EQ(f.max_size(), 34u);
}

TEST(Merge, ChignolinDefault) {
  JobSettings s;
  s.merge_glycine = true;
  const auto f = run("chignolin.pdb", s);
  EXPECT_EQ(f.size(), 6u);
  EXPECT_EQ(f.min_size(), 14u);
}

TEST(Merge, GlycineFreeChainIsUnchanged) {
  const auto &m = fixtures::load("ala10_alpha.pdb");
  const auto f = fragit::fragment(m, {});
  EXPECT_EQ(fragit::merge_glycine(m, f, fragit::kGlycinePattern), f);
}

TEST(Pipeline, NoProtectionRow) {
  const auto f = run("chignolin.pdb", no_protection());
  EXPECT_EQ(f.size(), 10u);
  EXPECT_EQ(f.min_size(), 7u);
  EXPECT_EQ(f.max_size(), 24u);
}

TEST(Pipeline, CrambinKeepsDisulfidesTogether) {
  const auto &m = fixtures::load("crambin.pdb");
  const auto f = fragit::fragment(m, {});
  EXPECT_EQ(f.size(), 42u);
  const auto member = f.membership(m.size());
  int bridges = 0;
  for (const auto &b : m.bonds())
    if (m.atom(b.a).element == 16 && m.atom(b.b).element == 16) {
      ++bridges;
      EXPECT_EQ(member[static_cast<std::size_t>(b.a)],
                member[static_cast<std::size_t>(b.b)]);
    }
  EXPECT_EQ(bridges, 3);
  for (const auto &c : f.cut_bonds)
    EXPECT_FALSE(m.atom(c.a).element == 16 && m.atom(c.b).element == 16);
}

TEST(Pipeline, DnaTerminiAndInterior) {
  const auto f = run("bdna.pdb");
  EXPECT_EQ(f.size(), 26u);
  int termini = 0;
  for (const auto &frag : f.fragments) {
    if (frag.size() == 9)
      ++termini;
    else
      EXPECT_TRUE(frag.size() >= 27 && frag.size() <= 33) << frag.size();
  }
  EXPECT_EQ(termini, 2);
}

TEST(Pipeline, AlanineChains) {
  for (const char *file : {"ala10_alpha.pdb", "ala10_beta.pdb", "ala20_beta.pdb"}) {
    const auto f = run(file);
    EXPECT_EQ(f.max_size(), 18u) << file;
    EXPECT_EQ(f.cut_bonds.size() + 1, f.size()) << file;
  }
}

TEST(Pipeline, PatternOverridesReplaceBuiltins) {
  JobSettings s;
  fragit::PatternSet none;
  none.glycine = fragit::kGlycinePattern;
  s.pattern_overrides = none;
  EXPECT_EQ(run("chignolin.pdb", s).size(), 1u);
}

TEST(Membership, MapsEveryAtom) {
  const auto f = run("water_trimer.xyz");
  const auto member = f.membership(9);
  EXPECT_EQ(member, (std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3, 3, 3}));
}

} // namespace
