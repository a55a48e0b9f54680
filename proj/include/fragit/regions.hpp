//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_REGIONS_HPP
#define FRAGIT_REGIONS_HPP

#include <optional>
#include <vector>

#include "fragit/fragmenter.hpp"
#include "fragit/molecule.hpp"

namespace fragit {

enum class FdRegion { kNone, kActive, kBuffer, kFrozen };

const char *fd_region_name(FdRegion region);

struct RegionAssignment {
  std::vector<int> layer; // per fragment, 1 or 2
  std::vector<FdRegion> fd;
  int central_fragment = 1;
  double boundary_distance = 0.0;
  std::optional<double> active_distance;
  std::optional<double> buffer_distance;

  bool has_fd() const noexcept { return active_distance.has_value(); }
  // Fragment ordinals (1-based) in the given region.
  std::vector<int> fragments_in(FdRegion region) const;

  friend bool operator==(const RegionAssignment &,
                         const RegionAssignment &) = default;
};

// Minimum atom-atom distance between fragments I and J (1-based).
double fragment_min_distance(const Molecule &mol, const Fragmentation &f,
                             int I, int J);

RegionAssignment assign_layers(const Molecule &mol, const Fragmentation &f,
                               int central, double boundary);

RegionAssignment assign_fd_regions(const Molecule &mol, const Fragmentation &f,
                                   int central, double active_d,
                                   double buffer_d,
                                   const RegionAssignment &base);

} // namespace fragit

#endif // FRAGIT_REGIONS_HPP
