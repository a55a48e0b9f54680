#!/usr/bin/env python3
#
# fragit - Copyright 2026 The fragit Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Small-molecule corpus for SMARTS and perception conformance tests.

Each molecule is written as a Kekule V2000 SDF with explicit hydrogens,
formal charges and an ETKDG/MMFF geometry. Needs RDKit.
"""

import argparse
import os

from rdkit import Chem
from rdkit.Chem import AllChem

CORPUS = [
    ("water", "O"),
    ("methane", "C"),
    ("ethane", "CC"),
    ("ethene", "C=C"),
    ("acetonitrile", "CC#N"),
    ("formaldehyde", "C=O"),
    ("ethanol", "CCO"),
    ("acetate", "CC(=O)[O-]"),
    ("methylammonium", "C[NH3+]"),
    ("benzene", "c1ccccc1"),
    ("phenol", "Oc1ccccc1"),
    ("pyridine", "c1ccncc1"),
    ("imidazolium", "c1c[nH+]c[nH]1"),
    ("guanidinium", "NC(=[NH2+])N"),
    ("nitromethane", "C[N+](=O)[O-]"),
    ("cyclohexane", "C1CCCCC1"),
    ("dimethyl_disulfide", "CSSC"),
    ("dimethyl_sulfoxide", "CS(C)=O"),
    ("urea", "NC(N)=O"),
    ("glycine_zwitterion", "[NH3+]CC(=O)[O-]"),
    ("glycylglycine", "[NH3+]CC(=O)NCC(=O)[O-]"),
    ("alanine_dipeptide", "CC(=O)NC(C)C(=O)NC"),
    ("glycine_dipeptide", "CC(=O)NCC(=O)NC"),
    ("n_terminal_dipeptide", "NCC(=O)NCC(=O)O"),
    ("glucose", "OC[C@H]1O[C@@H](O)[C@H](O)[C@@H](O)[C@@H]1O"),
    ("deoxyribose_phosphate", "COP(=O)(O)OCC1OCCC1"),
    ("indole", "c1ccc2[nH]ccc2c1"),
    ("cytosine", "Nc1cc[nH]c(=O)n1"),
    ("dimethyl_phosphate", "COP(=O)([O-])OC"),
    ("proline_amide", "CC(=O)N1CCCC1C(=O)NC"),
]


RADII = {"H": 0.31, "C": 0.76, "N": 0.71, "O": 0.66, "P": 1.07, "S": 1.05}
TOLERANCE = 0.45


def distance_bonds(mol):
    """Bonds implied by the coordinates under the library's cutoff rule."""
    pos = mol.GetConformer().GetPositions()
    atoms = [a.GetSymbol() for a in mol.GetAtoms()]
    out = set()
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            d = float(((pos[i] - pos[j]) ** 2).sum() ** 0.5)
            if 0.4 < d <= RADII[atoms[i]] + RADII[atoms[j]] + TOLERANCE:
                out.add((i, j))
    return out


def graph_bonds(mol):
    return {tuple(sorted((b.GetBeginAtomIdx(), b.GetEndAtomIdx())))
            for b in mol.GetBonds()}


def build(smiles):
    # Gas-phase MMFF can fold zwitterions until N-H sits on the carboxylate,
    # so keep the first geometry whose distance bonds equal the graph.
    for seed in range(0xF7A6, 0xF7A6 + 50):
        for optimize in (True, False):
            mol = Chem.AddHs(Chem.MolFromSmiles(smiles))
            AllChem.EmbedMolecule(mol, randomSeed=seed)
            if optimize and AllChem.MMFFHasAllMoleculeParams(mol):
                AllChem.MMFFOptimizeMolecule(mol, maxIters=2000)
            if distance_bonds(mol) == graph_bonds(mol):
                Chem.Kekulize(mol, clearAromaticFlags=True)
                return mol
    raise RuntimeError("no clean geometry for " + smiles)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(
        os.path.dirname(__file__), "..", "..", "data", "corpus"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for name, smiles in CORPUS:
        mol = build(smiles)
        assert mol.GetNumAtoms() <= 30, (name, mol.GetNumAtoms())
        mol.SetProp("_Name", name)
        block = Chem.MolToMolBlock(mol, kekulize=True, forceV3000=False)
        with open(os.path.join(args.out, name + ".sdf"), "w") as fh:
            fh.write(block)
            fh.write("$$$$\n")


if __name__ == "__main__":
    main()
