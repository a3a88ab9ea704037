#include "bdg/conjugacy.hpp"

#include <algorithm>
#include <numeric>

namespace bdg {

ConjugacyClasses conjugacy_classes(const Group& g) {
  const Group::Index n = g.size();
  const std::vector<Group::Index>& gens = g.generator_indices();

  constexpr std::uint32_t kUnassigned = 0xffffffffu;
  std::vector<std::uint32_t> class_of(n, kUnassigned);

  std::vector<Group::Index> reps;
  std::vector<std::uint64_t> sizes;
  std::vector<Group::Index> orbit;

  for (Group::Index seed = 0; seed < n; ++seed) {
    if (class_of[seed] != kUnassigned) continue;
    const std::uint32_t cls = static_cast<std::uint32_t>(reps.size());
    orbit.clear();
    orbit.push_back(seed);
    class_of[seed] = cls;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (Group::Index s : gens) {
        Group::Index y = g.conj(orbit[head], s);
        if (class_of[y] == kUnassigned) {
          class_of[y] = cls;
          orbit.push_back(y);
        }
      }
    }
    reps.push_back(seed);  // seed is the least element: seeds scan upward
    sizes.push_back(orbit.size());
  }

  // Reorder classes by (size, representative); the identity class has size 1
  // and representative 0, so it stays first.
  std::vector<std::uint32_t> order(reps.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return reps[a] < reps[b];
  });
  std::vector<std::uint32_t> new_of_old(reps.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) new_of_old[order[i]] = i;

  ConjugacyClasses result;
  result.reps.resize(reps.size());
  result.sizes.resize(reps.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    result.reps[i] = reps[order[i]];
    result.sizes[i] = sizes[order[i]];
  }
  result.class_of.resize(n);
  for (Group::Index e = 0; e < n; ++e)
    result.class_of[e] = new_of_old[class_of[e]];

  result.inverse_class.resize(reps.size());
  for (std::uint32_t k = 0; k < result.reps.size(); ++k)
    result.inverse_class[k] = result.class_of[g.inv(result.reps[k])];

  return result;
}

}  // namespace bdg
