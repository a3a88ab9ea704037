#ifndef BDG_SCHREIER_SIMS_HPP_
#define BDG_SCHREIER_SIMS_HPP_

#include <cstdint>
#include <vector>

#include "bdg/permutation.hpp"

namespace bdg {

/// Base and strong generating set for a permutation group, built with the
/// deterministic Schreier-Sims algorithm.  Level i acts with every strong
/// generator that fixes the first i base points; a base point is the least
/// point moved by the generator that created its level.
class Bsgs {
 public:
  /// Throws InvalidArgument on an empty generator list or mixed degrees.
  explicit Bsgs(std::vector<Permutation> generators);

  std::uint64_t order() const { return order_; }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> points;
    for (const Level& lv : levels_) points.push_back(lv.base_point);
    return points;
  }

  bool contains(const Permutation& p) const;

 private:
  struct Level {
    std::uint32_t base_point = 0;
    // transversal_slot[x] = index+1 of a coset representative mapping
    // base_point to x, 0 when x is outside the orbit.
    std::vector<std::uint32_t> transversal_slot;
    std::vector<Permutation> transversal;
    std::vector<std::uint32_t> orbit;

    const Permutation* representative(std::uint32_t x) const;
  };

  // True when g fixes the base points of all levels before `level`.
  bool qualifies(const Permutation& g, std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  bool strip(const Permutation& p, std::size_t from_level,
             Permutation* residue, std::size_t* drop_level) const;

  std::size_t degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
};

}  // namespace bdg

#endif  // BDG_SCHREIER_SIMS_HPP_
