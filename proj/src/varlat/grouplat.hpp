#pragma once

#include <string>
#include <vector>

#include "varlat/lattice.hpp"
#include "varlat/perm.hpp"

namespace varlat::grouplat {

// The lattice of all subgroups of S_degree, ordered by inclusion. Element i of
// the lattice corresponds to nodes[i] and carries names[i] as its label.
struct SubgroupLattice {
  lattice::FiniteLattice lattice;
  std::vector<perm::Subgroup> nodes;
  std::vector<std::string> names;
};

SubgroupLattice subgroup_lattice(int degree);

}  // namespace varlat::grouplat
