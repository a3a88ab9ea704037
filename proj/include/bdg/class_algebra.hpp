#ifndef BDG_CLASS_ALGEBRA_HPP_
#define BDG_CLASS_ALGEBRA_HPP_

#include <cstdint>
#include <vector>

#include "bdg/conjugacy.hpp"
#include "bdg/group.hpp"

namespace bdg {

/// Full structure-constant tensor a[i][j][k]: the number of ways an element
/// of class k factors as (element of class i) * (element of class j).
/// Cubic in the class count; meant for small groups and cross-checks.
struct StructureConstants {
  std::size_t classes = 0;
  std::vector<std::uint64_t> a;  // flattened [i][j][k]

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const {
    return a[(i * classes + j) * classes + k];
  }
};

StructureConstants structure_constants(const Group& g,
                                       const ConjugacyClasses& classes);

/// Row-major r x r class matrix M_i with (M_i)[j][k] = a[i][j][k].  Computed
/// on demand so the full tensor never needs to exist; cost is
/// |C_i| * r group operations.
std::vector<std::uint64_t> class_matrix(const Group& g,
                                        const ConjugacyClasses& classes,
                                        std::size_t i);

}  // namespace bdg

#endif  // BDG_CLASS_ALGEBRA_HPP_
