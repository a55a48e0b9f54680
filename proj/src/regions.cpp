//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/regions.hpp"

#include <cmath>
#include <limits>

#include "fragit/error.hpp"

namespace fragit {
namespace {

void check_ordinal(const Fragmentation &f, int k, const char *what) {
  if (k < 1 || k > static_cast<int>(f.size()))
    throw Error(ErrorKind::kConfig, std::string(what) + " " +
                                        std::to_string(k) + " outside 1.." +
                                        std::to_string(f.size()));
}

void check_distance(double d, const char *what) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw Error(ErrorKind::kConfig,
                std::string(what) + " must be a positive distance");
}

double squared(const Vec3 &p, const Vec3 &q) {
  const double dx = p[0] - q[0], dy = p[1] - q[1], dz = p[2] - q[2];
  return dx * dx + dy * dy + dz * dz;
}

// For every fragment, is any of its atoms within `cutoff` of `sources`?
std::vector<char> within(const Molecule &mol, const Fragmentation &f,
                         const std::vector<int> &sources, double cutoff) {
  const double limit = cutoff * cutoff;
  std::vector<char> hit(f.size(), 0);
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (int a : f.fragments[k]) {
      const auto &p = mol.atom(a).position;
      for (int s : sources) {
        if (squared(p, mol.atom(s).position) <= limit) {
          hit[k] = 1;
          break;
        }
      }
      if (hit[k])
        break;
    }
  }
  return hit;
}

} // namespace

const char *fd_region_name(FdRegion region) {
  switch (region) {
  case FdRegion::kNone:
    return "none";
  case FdRegion::kActive:
    return "active";
  case FdRegion::kBuffer:
    return "buffer";
  case FdRegion::kFrozen:
    return "frozen";
  }
  return "none";
}

std::vector<int> RegionAssignment::fragments_in(FdRegion region) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < fd.size(); ++k) {
    if (fd[k] == region)
      out.push_back(static_cast<int>(k) + 1);
  }
  return out;
}

double fragment_min_distance(const Molecule &mol, const Fragmentation &f,
                             int I, int J) {
  if (I < 1 || I > static_cast<int>(f.size()) || J < 1 ||
      J > static_cast<int>(f.size()))
    throw Error(ErrorKind::kIndex, "fragment ordinal outside 1.." +
                                       std::to_string(f.size()));
  double best = std::numeric_limits<double>::infinity();
  for (int a : f.fragments[static_cast<std::size_t>(I - 1)])
    for (int b : f.fragments[static_cast<std::size_t>(J - 1)])
      best = std::min(best, squared(mol.atom(a).position, mol.atom(b).position));
  return std::sqrt(best);
}

RegionAssignment assign_layers(const Molecule &mol, const Fragmentation &f,
                               int central, double boundary) {
  check_ordinal(f, central, "central fragment");
  check_distance(boundary, "boundary");
  RegionAssignment r;
  r.central_fragment = central;
  r.boundary_distance = boundary;
  r.fd.assign(f.size(), FdRegion::kNone);
  const auto near = within(
      mol, f, f.fragments[static_cast<std::size_t>(central - 1)], boundary);
  r.layer.assign(f.size(), 1);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (near[k] || static_cast<int>(k) + 1 == central)
      r.layer[k] = 2;
  }
  return r;
}

RegionAssignment assign_fd_regions(const Molecule &mol, const Fragmentation &f,
                                   int central, double active_d,
                                   double buffer_d,
                                   const RegionAssignment &base) {
  check_ordinal(f, central, "central fragment");
  check_distance(active_d, "active distance");
  check_distance(buffer_d, "buffer distance");
  if (base.layer.size() != f.size())
    throw Error(ErrorKind::kInternal, "layers do not match the fragmentation");

  RegionAssignment r = base;
  r.central_fragment = central;
  r.active_distance = active_d;
  r.buffer_distance = buffer_d;
  r.fd.assign(f.size(), FdRegion::kFrozen);

  const auto active = within(
      mol, f, f.fragments[static_cast<std::size_t>(central - 1)], active_d);
  std::vector<int> active_atoms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (active[k] || static_cast<int>(k) + 1 == central) {
      r.fd[k] = FdRegion::kActive;
      active_atoms.insert(active_atoms.end(), f.fragments[k].begin(),
                          f.fragments[k].end());
    }
  }
  const auto buffer = within(mol, f, active_atoms, buffer_d);
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (r.fd[k] != FdRegion::kActive && buffer[k])
      r.fd[k] = FdRegion::kBuffer;
    if (r.fd[k] != FdRegion::kFrozen)
      r.layer[k] = 2;
  }
  return r;
}

} // namespace fragit
