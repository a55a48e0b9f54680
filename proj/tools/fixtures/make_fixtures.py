#!/usr/bin/env python3
#
# Copyright 2026 The fragit Authors.
# SPDX-License-Identifier: Apache-2.0
#
"""Regenerates the structure fixtures under data/fixtures.

Needs pymol-open-source, openmm, pdbfixer, PeptideBuilder, biopython and
rdkit (numpy<2).  The committed fixtures are the source of truth for the
test suite; this script only documents how they were produced.

    python tools/fixtures/make_fixtures.py --crambin-source pdb1ejg.pdb
"""

import argparse
import io
import math
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "fixtures"


# --------------------------------------------------------------------------
# proteins

def _protonate(pdb_text, minimize=True, keep_heavy=True):
    import openmm
    from openmm import app, unit
    from pdbfixer import PDBFixer

    fixer = PDBFixer(pdbfile=io.StringIO(pdb_text))
    fixer.findMissingResidues()
    fixer.missingResidues = {}
    fixer.findMissingAtoms()
    fixer.addMissingAtoms()
    fixer.addMissingHydrogens(7.0)
    top, pos = fixer.topology, fixer.positions
    if minimize:
        ff = app.ForceField("amber14-all.xml")
        system = ff.createSystem(top, nonbondedMethod=app.NoCutoff,
                                 constraints=None)
        if keep_heavy:
            restraint = openmm.CustomExternalForce(
                "k*((x-x0)^2+(y-y0)^2+(z-z0)^2)")
            restraint.addGlobalParameter("k", 5.0e4)
            for p in ("x0", "y0", "z0"):
                restraint.addPerParticleParameter(p)
            for atom in top.atoms():
                if atom.element.symbol != "H":
                    restraint.addParticle(
                        atom.index, pos[atom.index].value_in_unit(unit.nanometer))
            system.addForce(restraint)
        integrator = openmm.VerletIntegrator(0.001)
        ctx = openmm.Context(system, integrator,
                             openmm.Platform.getPlatformByName("Reference"))
        ctx.setPositions(pos)
        openmm.LocalEnergyMinimizer.minimize(ctx, 1.0, 2000)
        pos = ctx.getState(getPositions=True).getPositions()
    buf = io.StringIO()
    app.PDBFile.writeFile(top, pos, buf, keepIds=True)
    return buf.getvalue()


def _strip(text, keep=("ATOM", "HETATM", "TER", "END", "CONECT", "SSBOND")):
    return "".join(l for l in text.splitlines(True) if l.startswith(keep))


def _peptide(seq, phi, psi):
    import PeptideBuilder
    from Bio.PDB import PDBIO

    structure = PeptideBuilder.make_structure(seq, phi, psi)
    io_ = PDBIO()
    io_.set_structure(structure)
    buf = io.StringIO()
    io_.save(buf)
    return buf.getvalue()


def _header(title, lines=()):
    out = [f"REMARK   1 {title}\n"]
    out += [f"REMARK   1 {l}\n" for l in lines]
    return "".join(out)


def chignolin():
    # GYDPETGTWG folded as a two-residue-turn beta hairpin.
    seq = "GYDPETGTWG"
    phi = [-140, -120, -90, -60, -90, 75, -140, -120, -140]
    psi = [150, 130, 120, -30, 0, 20, 150, 130, 150, 150]
    text = _peptide(seq, phi, psi[1:])
    return _header("CHIGNOLIN GYDPETGTWG, PROTONATED PH 7 (MODEL BUILT)") + \
        _strip(_protonate(text))


def trpcage():
    seq = "NLYIQWLKDGGPSSGRPPPS"
    phi, psi = [], []
    for i, _ in enumerate(seq):
        if 1 <= i <= 8:
            phi.append(-57), psi.append(-47)
        elif 10 <= i <= 13:
            phi.append(-60), psi.append(-25)
        else:
            phi.append(-75), psi.append(145)
    text = _peptide(seq, phi[1:], psi[1:])
    return _header("TRP-CAGE NLYIQWLKDGGPSSGRPPPS, PROTONATED PH 7 (MODEL BUILT)") + \
        _strip(_protonate(text))


def capped_alanine(n, helix):
    phi, psi = (-57, -47) if helix else (-139, 135)
    text = _peptide("G" + "A" * n + "G", [phi] * (n + 1), [psi] * (n + 1))
    out = []
    for line in text.splitlines(True):
        if not line.startswith("ATOM"):
            out.append(line)
            continue
        resi, name = int(line[22:26]), line[12:16].strip()
        if resi == 1:
            # Gly -> ACE: CA becomes the methyl carbon.
            if name == "N":
                continue
            line = line[:17] + "ACE" + line[20:]
            if name == "CA":
                line = line[:12] + " CH3" + line[16:]
        elif resi == n + 2:
            # Gly -> NME: CA becomes the methyl carbon.
            if name in ("C", "O"):
                continue
            line = line[:17] + "NME" + line[20:]
            if name == "CA":
                line = line[:12] + " C  " + line[16:]
        out.append(line)
    kind = "ALPHA-HELIX" if helix else "BETA-STRAND"
    return _header(f"METHYL-CAPPED ({kind}) ALA{n}") + \
        _strip(_protonate("".join(out)))


def crambin(source):
    # Altloc A throughout except residue 25 (ILE, altloc B), giving the
    # P22/I25 sequence variant.
    lines, seen = [], set()
    for line in open(source):
        if not line.startswith("ATOM"):
            continue
        alt, resi, name = line[16], int(line[22:26]), line[12:16].strip()
        if line[76:78].strip() == "H" or name.startswith("H"):
            continue
        want = "B" if resi == 25 else "A"
        if alt not in (" ", want) or (resi, name) in seen:
            continue
        seen.add((resi, name))
        line = line[:16] + " " + line[17:]
        if resi == 25:
            line = line[:17] + "ILE" + line[20:]
        lines.append(line)
    text = "".join(lines) + "END\n"
    ss = "".join(l for l in open(source) if l.startswith("SSBOND"))
    body = _protonate(ss + text)
    return _header("CRAMBIN, HEAVY ATOMS FROM 1EJG (P22/I25), PROTONATED PH 7") + \
        _strip(body)


# --------------------------------------------------------------------------
# DNA

def bdna():
    from pymol import cmd

    strand = "CGCAATTGCATG"
    cmd.reinitialize()
    cmd.fnab(strand, name="dna", mode="DNA", form="B", dbl_helix=1)
    cmd.h_add("dna")
    # Internal phosphates anionic: drop the proton on O2P.
    cmd.remove("hydro and neighbor name O2P")
    model = cmd.get_model("dna")
    atoms = model.atom
    pos = {i: np.array(a.coord) for i, a in enumerate(atoms)}
    # 5'-terminal phosphates become -O-PO3H(-).
    extra = []
    for chain in ("A", "B"):
        resis = sorted({int(a.resi) for a in atoms if a.chain == chain})
        r5 = resis[0] if chain == "A" else resis[0]
        idx = {a.name: i for i, a in enumerate(atoms)
               if a.chain == chain and int(a.resi) == r5}
        p = pos[idx["P"]]
        dirs = [(pos[idx[n]] - p) / np.linalg.norm(pos[idx[n]] - p)
                for n in ("O1P", "O2P", "O5'")]
        v = -sum(dirs)
        v /= np.linalg.norm(v)
        o3 = p + 1.60 * v
        perp = np.cross(v, dirs[0])
        perp /= np.linalg.norm(perp)
        h = o3 + 0.97 * (math.cos(math.radians(70)) * v +
                         math.sin(math.radians(70)) * perp)
        extra.append((chain, r5, atoms[idx["P"]].resn, "OP3", "O", o3))
        extra.append((chain, r5, atoms[idx["P"]].resn, "HOP3", "H", h))

    records = []
    for chain in ("A", "B"):
        resis = sorted({int(a.resi) for a in atoms if a.chain == chain})
        if chain == "B":
            resis = sorted(resis)
        for n, r in enumerate(resis, start=1):
            res = [a for a in atoms if a.chain == chain and int(a.resi) == r]
            res.sort(key=lambda a: (a.symbol == "H", a.index))
            hcount = 0
            for a in res:
                name = {"O1P": "OP1", "O2P": "OP2"}.get(a.name, a.name)
                if a.symbol == "H":
                    hcount += 1
                    name = f"H{hcount}"
                records.append((chain, n, a.resn, name, a.symbol, np.array(a.coord)))
                if a.name == "O2P":
                    for e in extra:
                        if e[0] == chain and e[1] == r:
                            records.append((chain, n, e[2], e[3], e[4], e[5]))
    out = [_header("B-DNA DUPLEX 5'-CGCAATTGCATG-3', BUILT B-FORM",
                   ["5'-PHOSPHATE MONOPROTONATED, INTERNAL PHOSPHATES ANIONIC"])]
    serial = 0
    prev_chain = None
    for chain, resi, resn, name, el, xyz in records:
        if prev_chain is not None and chain != prev_chain:
            out.append("TER\n")
        prev_chain = chain
        serial += 1
        nm = name if len(name) == 4 else " " + name
        out.append("ATOM  %5d %-4s %3s %1s%4d    %8.3f%8.3f%8.3f  1.00  0.00          %2s\n"
                   % (serial, nm, resn, chain, resi, xyz[0], xyz[1], xyz[2], el))
    out.append("TER\nEND\n")
    return "".join(out)


# --------------------------------------------------------------------------
# small-molecule fixtures (RDKit)

def _embed(mol, seed=7):
    from rdkit import Chem
    from rdkit.Chem import AllChem

    mol = Chem.AddHs(mol)
    params = AllChem.ETKDGv3()
    params.randomSeed = seed
    params.useMacrocycleTorsions = True
    if AllChem.EmbedMolecule(mol, params) != 0:
        raise RuntimeError("embedding failed")
    AllChem.MMFFOptimizeMolecule(mol, maxIters=5000)
    return mol


def _set_cip(mol, wanted):
    from rdkit import Chem

    for idx, label in wanted.items():
        atom = mol.GetAtomWithIdx(idx)
        atom.SetChiralTag(Chem.ChiralType.CHI_TETRAHEDRAL_CW)
        Chem.AssignStereochemistry(mol, cleanIt=True, force=True)
        if atom.GetProp("_CIPCode") != label:
            atom.SetChiralTag(Chem.ChiralType.CHI_TETRAHEDRAL_CCW)
    Chem.AssignStereochemistry(mol, cleanIt=True, force=True)


def beta_cyclodextrin():
    from rdkit import Chem

    # Seven alpha-1,4 linked glucopyranose units closed into a ring.
    rw = Chem.RWMol()
    units = []
    for _ in range(7):
        u = {}
        for name in ("C1", "C2", "C3", "C4", "C5", "C6", "O2", "O3", "O4",
                     "O5", "O6"):
            u[name] = rw.AddAtom(Chem.Atom(6 if name[0] == "C" else 8))
        for a, b in (("C1", "C2"), ("C2", "C3"), ("C3", "C4"), ("C4", "C5"),
                     ("C5", "O5"), ("O5", "C1"), ("C5", "C6"), ("C6", "O6"),
                     ("C2", "O2"), ("C3", "O3"), ("C4", "O4")):
            rw.AddBond(u[a], u[b], Chem.BondType.SINGLE)
        units.append(u)
    for k in range(7):
        rw.AddBond(units[k]["O4"], units[(k + 1) % 7]["C1"], Chem.BondType.SINGLE)
    mol = rw.GetMol()
    Chem.SanitizeMol(mol)
    wanted = {}
    for u in units:
        wanted.update({u["C1"]: "S", u["C2"]: "R", u["C3"]: "S",
                       u["C4"]: "S", u["C5"]: "R"})
    _set_cip(mol, wanted)
    mol = _embed(mol)
    # PDB with one residue per glucose unit.
    conf = mol.GetConformer()
    owner = {}
    for k, u in enumerate(units):
        for name, idx in u.items():
            owner[idx] = (k + 1, name)
    hcount = {}
    lines = [_header("BETA-CYCLODEXTRIN (ALPHA-1,4 D-GLUCOPYRANOSE HEPTAMER)")]
    order = []
    for k, u in enumerate(units):
        for name in ("C1", "C2", "C3", "C4", "C5", "C6", "O2", "O3", "O4",
                     "O5", "O6"):
            idx = u[name]
            order.append((k + 1, name, idx))
            for nb in mol.GetAtomWithIdx(idx).GetNeighbors():
                if nb.GetAtomicNum() == 1:
                    hcount[k + 1] = hcount.get(k + 1, 0) + 1
                    order.append((k + 1, f"H{hcount[k + 1]}", nb.GetIdx()))
    for serial, (resi, name, idx) in enumerate(order, start=1):
        p = conf.GetAtomPosition(idx)
        el = "H" if name.startswith("H") else name[0]
        nm = name if len(name) == 4 else " " + name
        lines.append("HETATM%5d %-4s GLC A%4d    %8.3f%8.3f%8.3f  1.00  0.00          %2s\n"
                     % (serial, nm, resi, p.x, p.y, p.z, el))
    lines.append("END\n")
    return "".join(lines)


def leucoemeraldine():
    from rdkit import Chem

    smiles = "c1ccccc1N" + "c1ccc(cc1)N" * 7
    mol = _embed(Chem.MolFromSmiles(smiles))
    Chem.Kekulize(mol, clearAromaticFlags=True)
    mol.SetProp("_Name", "leucoemeraldine octamer")
    sdf = Chem.MolToMolBlock(mol, kekulize=True)
    # Amine N of unit k bonded to the ipso carbon of unit k+1.
    pairs = []
    for atom in mol.GetAtoms():
        if atom.GetAtomicNum() != 7:
            continue
        carbons = sorted(nb.GetIdx() for nb in atom.GetNeighbors()
                         if nb.GetAtomicNum() == 6)
        if len(carbons) == 2:
            pairs.append((atom.GetIdx() + 1, carbons[1] + 1))
    return sdf + "$$$$\n", pairs


def water_trimer():
    return """9
water trimer
O    0.000000    0.000000    0.000000
H    0.957200    0.000000    0.000000
H   -0.239987    0.926627    0.000000
O    2.900000    0.000000    0.000000
H    3.857200    0.000000    0.000000
H    2.660013    0.926627    0.000000
O    1.450000    2.600000    0.000000
H    2.407200    2.600000    0.000000
H    1.210013    3.526627    0.000000
"""


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--crambin-source", required=True)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)

    (OUT / "chignolin.pdb").write_text(chignolin())
    (OUT / "trpcage.pdb").write_text(trpcage())
    (OUT / "crambin.pdb").write_text(crambin(args.crambin_source))
    for n in (10, 20, 40):
        (OUT / f"ala{n}_alpha.pdb").write_text(capped_alanine(n, True))
        (OUT / f"ala{n}_beta.pdb").write_text(capped_alanine(n, False))
    (OUT / "bdna.pdb").write_text(bdna())
    (OUT / "beta_cyclodextrin.pdb").write_text(beta_cyclodextrin())
    sdf, pairs = leucoemeraldine()
    (OUT / "leucoemeraldine.sdf").write_text(sdf)
    pairs_text = "".join(f"{a},{b};" for a, b in pairs)
    (OUT / "leucoemeraldine.conf").write_text(
        f"[explicitfragmentpairs]\npairs = {pairs_text}\n")
    (OUT / "water_trimer.xyz").write_text(water_trimer())


if __name__ == "__main__":
    main()
