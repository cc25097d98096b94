#include "varlat/grouplat.hpp"

#include <cstdint>

namespace varlat::grouplat {

SubgroupLattice subgroup_lattice(int degree) {
  std::vector<perm::Subgroup> nodes = perm::all_subgroups(degree);
  std::vector<std::string> names = perm::name_subgroups(nodes);
  const int n = static_cast<int>(nodes.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (nodes[static_cast<std::size_t>(j)].contains(nodes[static_cast<std::size_t>(i)]))
        leq[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = 1;
  auto lat = lattice::FiniteLattice::from_leq(n, std::move(leq), names);
  return SubgroupLattice{std::move(lat), std::move(nodes), std::move(names)};
}

}  // namespace varlat::grouplat
