//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "deck.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deck {

namespace {

std::string trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos)
    return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::vector<int> csv_ints(const std::string &s) {
  std::vector<int> out;
  std::string item;
  std::stringstream in(s);
  while (std::getline(in, item, ','))
    if (!trim(item).empty())
      out.push_back(std::stoi(item));
  return out;
}

// Expands "1,-34,37" style lists, where -b closes a range opened by the
// previous entry.
std::vector<int> expand(const std::vector<int> &tokens) {
  std::vector<int> out;
  for (int t : tokens) {
    if (t < 0 && !out.empty())
      for (int a = out.back() + 1; a <= -t; ++a)
        out.push_back(a);
    else
      out.push_back(t);
  }
  return out;
}

} // namespace

Deck parse(const std::string &text) {
  Deck d;
  std::stringstream in(text);
  std::string line;
  std::string group;
  bool in_indat = false;
  std::vector<int> current;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.rfind("$", 0) == 0) {
      group = t.substr(0, t.find(' '));
      in_indat = false;
      if (group == "$end")
        group.clear();
      continue;
    }
    if (group == "$fmo") {
      if (t.rfind("nfrag=", 0) == 0) {
        std::stringstream fields(t);
        std::string f;
        while (fields >> f) {
          if (f.rfind("nfrag=", 0) == 0)
            d.nfrag = std::stoi(f.substr(6));
          if (f.rfind("nlayer=", 0) == 0)
            d.nlayer = std::stoi(f.substr(7));
        }
      } else if (t.rfind("icharg(1)=", 0) == 0) {
        d.charges = csv_ints(t.substr(10));
      } else if (t.rfind("layer(1)=", 0) == 0) {
        d.layers = csv_ints(t.substr(9));
      } else if (t.rfind("indat(1)=", 0) == 0) {
        in_indat = true;
      } else if (in_indat && !t.empty() && (std::isdigit(t[0]) || t[0] == '-')) {
        std::stringstream fields(t);
        int v = 0;
        while (fields >> v) {
          if (v == 0) {
            d.fragments.push_back(expand(current));
            current.clear();
          } else {
            current.push_back(v);
          }
        }
      } else {
        in_indat = false;
      }
    } else if (group == "$fmobnd" && !t.empty()) {
      std::stringstream fields(t);
      int a = 0, b = 0;
      fields >> a >> b;
      d.bonds.push_back({-a, b});
    } else if (group == "$statpt" && t.rfind("iactat(1)=", 0) == 0) {
      d.active_atoms = expand(csv_ints(t.substr(10)));
    } else if (group == "$fmoxyz" && !t.empty()) {
      ++d.xyz_atoms;
    }
  }
  return d;
}

std::string check(const Deck &d, int atom_count, int total_charge,
                  std::size_t cut_count) {
  if (d.nfrag != static_cast<int>(d.fragments.size()))
    return "nfrag does not match indat";
  if (d.charges.size() != d.fragments.size())
    return "icharg length does not match nfrag";
  std::vector<int> all;
  for (const auto &f : d.fragments) {
    if (f.empty())
      return "empty fragment in indat";
    all.insert(all.end(), f.begin(), f.end());
  }
  std::sort(all.begin(), all.end());
  for (int i = 0; i < static_cast<int>(all.size()); ++i)
    if (all[static_cast<std::size_t>(i)] != i + 1)
      return "indat is not a permutation of 1..N";
  if (static_cast<int>(all.size()) != atom_count)
    return "indat covers " + std::to_string(all.size()) + " atoms, expected " +
           std::to_string(atom_count);
  int q = 0;
  for (int c : d.charges)
    q += c;
  if (q != total_charge)
    return "icharg sums to " + std::to_string(q);
  if (d.bonds.size() != cut_count)
    return "fmobnd has " + std::to_string(d.bonds.size()) + " entries";
  if (d.xyz_atoms != atom_count)
    return "fmoxyz has " + std::to_string(d.xyz_atoms) + " atoms";
  if (d.nlayer == 2 && d.layers.size() != d.fragments.size())
    return "layer list length does not match nfrag";
  return {};
}

} // namespace deck
