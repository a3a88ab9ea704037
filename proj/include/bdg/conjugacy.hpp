#ifndef BDG_CONJUGACY_HPP_
#define BDG_CONJUGACY_HPP_

#include <cstdint>
#include <vector>

#include "bdg/group.hpp"

namespace bdg {

/// The conjugacy class partition of an enumerated group.  Classes are sorted
/// by (size, least element index); the identity class is always class 0.
/// Representatives are the canonically least element of each class.
struct ConjugacyClasses {
  std::vector<Group::Index> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;       // element index -> class index
  std::vector<std::uint32_t> inverse_class;  // class index -> class of inverses

  std::size_t count() const { return reps.size(); }
};

/// Partitions the group by orbit closure under conjugation by the generators,
/// seeded from unassigned elements in canonical order.
ConjugacyClasses conjugacy_classes(const Group& g);

}  // namespace bdg

#endif  // BDG_CONJUGACY_HPP_
