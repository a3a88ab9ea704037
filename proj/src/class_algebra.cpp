#include "bdg/class_algebra.hpp"

namespace bdg {

namespace {

// Elements of class i, found by one sweep over the group.
std::vector<Group::Index> class_members(const Group& g,
                                        const ConjugacyClasses& classes,
                                        std::size_t i) {
  std::vector<Group::Index> members;
  members.reserve(classes.sizes[i]);
  for (Group::Index e = 0; e < g.size(); ++e)
    if (classes.class_of[e] == i) members.push_back(e);
  return members;
}

}  // namespace

std::vector<std::uint64_t> class_matrix(const Group& g,
                                        const ConjugacyClasses& classes,
                                        std::size_t i) {
  const std::size_t r = classes.count();
  std::vector<std::uint64_t> m(r * r, 0);
  // a[i][j][k] = #{x in C_i : x^-1 * rep_k in C_j}, since x*y = rep_k has a
  // unique y per x and class sums commute with conjugation.
  for (Group::Index x : class_members(g, classes, i)) {
    const Group::Index xi = g.inv(x);
    for (std::size_t k = 0; k < r; ++k) {
      Group::Index y = g.mult(xi, classes.reps[k]);
      ++m[static_cast<std::size_t>(classes.class_of[y]) * r + k];
    }
  }
  return m;
}

StructureConstants structure_constants(const Group& g,
                                       const ConjugacyClasses& classes) {
  const std::size_t r = classes.count();
  StructureConstants sc;
  sc.classes = r;
  sc.a.assign(r * r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::uint64_t> m = class_matrix(g, classes, i);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        sc.a[(i * r + j) * r + k] = m[j * r + k];
  }
  return sc;
}

}  // namespace bdg
