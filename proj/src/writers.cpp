//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/writers.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <fmt/format.h>

#include "fragit/elements.hpp"
#include "fragit/error.hpp"

namespace fragit {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  return s;
}

void check_fragmentation(const Molecule &mol, const Fragmentation &f) {
  if (f.charges.size() != f.fragments.size())
    throw Error(ErrorKind::kInternal, "fragment charges are missing");
  std::vector<char> seen(mol.size() + 1, 0);
  for (const auto &frag : f.fragments) {
    if (frag.empty())
      throw Error(ErrorKind::kInternal, "fragment with zero atoms");
    for (int a : frag) {
      if (a < 1 || static_cast<std::size_t>(a) > mol.size() ||
          seen[static_cast<std::size_t>(a)])
        throw Error(ErrorKind::kInternal,
                    "fragments do not partition the atoms");
      seen[static_cast<std::size_t>(a)] = 1;
    }
  }
  if (std::count(seen.begin() + 1, seen.end(), 1) !=
      static_cast<long>(mol.size()))
    throw Error(ErrorKind::kInternal, "fragments do not cover every atom");
}

// Writes `items` after `lead`, wrapping at `per_line` items with the
// continuation indented to line up under the first item.
void wrapped(std::string &out, const std::string &lead,
             const std::vector<std::string> &items, std::size_t per_line,
             const std::string &sep) {
  const std::string pad(lead.size(), ' ');
  out += lead;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k > 0 && k % per_line == 0) {
      std::string head = sep;
      while (!head.empty() && head.back() == ' ')
        head.pop_back();
      out += head + "\n" + pad;
    } else if (k > 0) {
      out += sep;
    }
    out += items[k];
  }
  out += '\n';
}

std::string fragment_selection_ids(const std::vector<int> &atoms,
                                   const char *range_sep,
                                   const char *join) {
  std::string out;
  std::size_t k = 0;
  while (k < atoms.size()) {
    std::size_t end = k;
    while (end + 1 < atoms.size() && atoms[end + 1] == atoms[end] + 1)
      ++end;
    if (!out.empty())
      out += join;
    out += std::to_string(atoms[k]);
    if (end > k)
      out += range_sep + std::to_string(atoms[end]);
    k = end + 1;
  }
  return out;
}

const char *region_color(FdRegion region) {
  switch (region) {
  case FdRegion::kActive:
    return "red";
  case FdRegion::kBuffer:
    return "blue";
  case FdRegion::kFrozen:
    return "green";
  case FdRegion::kNone:
    break;
  }
  return "grey";
}

} // namespace

std::vector<std::string> index_ranges(const std::vector<int> &atoms) {
  std::vector<int> sorted = atoms;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> out;
  std::size_t k = 0;
  while (k < sorted.size()) {
    std::size_t end = k;
    while (end + 1 < sorted.size() && sorted[end + 1] == sorted[end] + 1)
      ++end;
    out.push_back(std::to_string(sorted[k]));
    if (end > k)
      out.push_back(std::to_string(-sorted[end]));
    k = end + 1;
  }
  return out;
}

std::pair<std::string, int> gamess_basis(const std::string &name) {
  const std::string key = lower(name);
  if (key == "sto-3g")
    return {"sto", 3};
  if (key == "3-21g")
    return {"n21", 3};
  if (key == "6-31g")
    return {"n31", 6};
  if (key == "6-311g")
    return {"n311", 6};
  throw Error(ErrorKind::kConfig,
              "basis '" + name +
                  "' is not supported (use STO-3G, 3-21G, 6-31G or 6-311G)");
}

std::string write_gamess_fmo(const Molecule &mol, const Fragmentation &f,
                             const std::optional<RegionAssignment> &regions,
                             const GamessSettings &s) {
  check_fragmentation(mol, f);
  if (s.memory_per_core < 8)
    throw Error(ErrorKind::kConfig, "memory per core must be at least 8 MB");
  const auto [gbasis, ngauss] = gamess_basis(s.basis);
  const bool fd = regions && regions->has_fd();
  const std::string runtyp = fd ? "optimize" : lower(s.run_type);
  const int nlayer = regions ? 2 : 1;
  const std::string title = mol.name().empty() ? "fragit" : mol.name();

  std::string out;
  out += fmt::format("! FMO input for {} written by fragit\n", title);
  out += fmt::format("! atoms: {}  fragments: {}  charge: {}\n", mol.size(),
                     f.size(), mol.total_formal_charge());
  if (fd) {
    auto list = [&](FdRegion region) {
      std::string text;
      for (int k : regions->fragments_in(region))
        text += (text.empty() ? "" : " ") + std::to_string(k);
      return text.empty() ? std::string("none") : text;
    };
    out += fmt::format("! active fragments: {}\n", list(FdRegion::kActive));
    out += fmt::format("! buffer fragments: {}\n", list(FdRegion::kBuffer));
    out += fmt::format("! frozen fragments: {}\n", list(FdRegion::kFrozen));
  }

  out += fmt::format(" $contrl nprint=-5 ispher=-1 scftyp={} runtyp={} "
                     "maxit=100 $end\n",
                     lower(s.scf_type), runtyp);
  out += fmt::format(" $system mwords={} $end\n", s.memory_per_core / 8);
  out += " $gddi ngroup=1 $end\n";
  out += " $scf conv=1e-7 dirscf=.true. npunch=0 $end\n";
  if (fd) {
    std::vector<int> moving;
    for (int k : regions->fragments_in(FdRegion::kActive)) {
      const auto &frag = f.fragments[static_cast<std::size_t>(k - 1)];
      moving.insert(moving.end(), frag.begin(), frag.end());
    }
    out += " $statpt opttol=5e-4 nstep=1000\n";
    wrapped(out, "      iactat(1)=", index_ranges(moving), 10, ",");
    out += " $end\n";
  }

  out += " $fmo\n";
  out += fmt::format("      nfrag={} nlayer={}\n", f.size(), nlayer);
  std::vector<std::string> charges;
  for (int q : f.charges)
    charges.push_back(std::to_string(q));
  wrapped(out, "      icharg(1)=", charges, 10, ",");
  out += "      indat(1)=0\n";
  for (const auto &frag : f.fragments) {
    auto items = index_ranges(frag);
    items.push_back("0");
    wrapped(out, "               ", items, 12, " ");
  }
  if (regions) {
    std::vector<std::string> layers;
    for (int l : regions->layer)
      layers.push_back(std::to_string(l));
    wrapped(out, "      layer(1)=", layers, 10, ",");
  }
  if (fd) {
    std::vector<std::string> active;
    for (int k : regions->fragments_in(FdRegion::kActive))
      active.push_back(std::to_string(k));
    out += "      modfd=1\n";
    wrapped(out, "      iactfg(1)=", active, 10, ",");
  }
  if (!f.cut_bonds.empty())
    out += "      rafo(1)=1,1,1\n";
  out += " $end\n";
  out += " $fmoprp naodir=200 nguess=2 $end\n";

  out += " $fmobnd\n";
  for (const auto &cut : f.cut_bonds)
    out += fmt::format("      {} {}\n", -cut.a, cut.b);
  out += " $end\n";

  out += " $data\n";
  out += title + "\n";
  out += "c1\n";
  std::set<int> elements;
  for (const auto &atom : mol.atoms())
    elements.insert(atom.element);
  for (int z : elements) {
    for (int layer = 1; layer <= nlayer; ++layer) {
      out += fmt::format("{}-{} {}\n", lower(element_symbol(z)), layer, z);
      out += fmt::format(" {} {}\n\n", gbasis, ngauss);
    }
  }
  out += " $end\n";

  out += " $fmoxyz\n";
  for (const auto &atom : mol.atoms()) {
    out += fmt::format(" {:<2} {:5.1f} {:14.6f} {:14.6f} {:14.6f}\n",
                       element_symbol(atom.element),
                       static_cast<double>(atom.element), atom.position[0],
                       atom.position[1], atom.position[2]);
  }
  out += " $end\n";
  return out;
}

std::string write_pymol_script(const Molecule &mol, const Fragmentation &f,
                               const std::optional<RegionAssignment> &regions,
                               const std::string &structure_path) {
  check_fragmentation(mol, f);
  const std::string object = mol.name().empty() ? "structure" : mol.name();
  std::string out;
  out += "# PyMOL script written by fragit\n";
  out += fmt::format("load {}, {}\n", structure_path, object);
  out += "hide everything\n";
  out += "show sticks\n";
  out += "set valence, 1\n";
  for (std::size_t k = 0; k < f.size(); ++k)
    out += fmt::format("select fragment{}, {} and id {}\n", k + 1, object,
                       fragment_selection_ids(f.fragments[k], "-", "+"));
  if (regions && regions->has_fd()) {
    for (FdRegion region :
         {FdRegion::kActive, FdRegion::kBuffer, FdRegion::kFrozen}) {
      const auto members = regions->fragments_in(region);
      if (members.empty())
        continue;
      std::string sel;
      for (int k : members)
        sel += (sel.empty() ? "fragment" : " or fragment") + std::to_string(k);
      out += fmt::format("select {}, {}\n", fd_region_name(region), sel);
      out += fmt::format("color {}, {}\n", region_color(region),
                         fd_region_name(region));
    }
  } else {
    for (std::size_t k = 0; k < f.size(); ++k)
      out += fmt::format("color {}, fragment{}\n", kPalette[k % 6], k + 1);
  }
  out += "deselect\n";
  return out;
}

std::string write_jmol_script(const Molecule &mol, const Fragmentation &f,
                              const std::optional<RegionAssignment> &regions,
                              const std::string &structure_path) {
  check_fragmentation(mol, f);
  std::string out;
  out += "# Jmol script written by fragit\n";
  out += fmt::format("load \"{}\"\n", structure_path);
  out += "wireframe 0.15; spacefill off\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    std::string expr;
    const auto &atoms = f.fragments[k];
    std::size_t i = 0;
    while (i < atoms.size()) {
      std::size_t end = i;
      while (end + 1 < atoms.size() && atoms[end + 1] == atoms[end] + 1)
        ++end;
      if (!expr.empty())
        expr += " or ";
      if (end > i)
        expr += fmt::format("(atomno>={} and atomno<={})", atoms[i], atoms[end]);
      else
        expr += fmt::format("atomno={}", atoms[i]);
      i = end + 1;
    }
    out += fmt::format("define fragment{} {}\n", k + 1, expr);
  }
  if (regions && regions->has_fd()) {
    for (FdRegion region :
         {FdRegion::kActive, FdRegion::kBuffer, FdRegion::kFrozen}) {
      const auto members = regions->fragments_in(region);
      if (members.empty())
        continue;
      std::string sel;
      for (int k : members)
        sel += (sel.empty() ? "fragment" : ", fragment") + std::to_string(k);
      out += fmt::format("select {}\n", sel);
      out += fmt::format("color {}\n", region_color(region));
    }
  } else {
    for (std::size_t k = 0; k < f.size(); ++k) {
      out += fmt::format("select fragment{}\n", k + 1);
      out += fmt::format("color {}\n", kPalette[k % 6]);
    }
  }
  out += "select none\n";
  return out;
}

} // namespace fragit
