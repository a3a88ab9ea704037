#ifndef BDG_DERIVED_SERIES_HPP_
#define BDG_DERIVED_SERIES_HPP_

#include <cstdint>
#include <vector>

#include "bdg/group.hpp"

namespace bdg {

/// Orders along G >= G' >= G'' >= ... until the series stabilizes.
/// subgroup_orders[0] == |G|; the last entry is 1 exactly when G is solvable,
/// otherwise the order of the perfect term the series stalls at.
struct DerivedSeriesReport {
  std::vector<std::uint64_t> subgroup_orders;
  bool solvable = false;
  /// Number of strict steps down to the trivial group; 0 for the trivial
  /// group, 1 for nontrivial abelian groups.  Meaningful only when solvable.
  std::size_t derived_length = 0;
};

/// Element indices of the commutator subgroup [H, H], where H is given by a
/// generating set of element indices in g.  Computed as the normal closure
/// (within H) of the commutators of the listed generators.
std::vector<Group::Index> commutator_subgroup(
    const Group& g, const std::vector<Group::Index>& h_gens);

DerivedSeriesReport derived_series(const Group& g);

}  // namespace bdg

#endif  // BDG_DERIVED_SERIES_HPP_
