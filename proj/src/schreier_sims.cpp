#include "bdg/schreier_sims.hpp"

#include <algorithm>

namespace bdg {

const Permutation* Bsgs::Level::representative(std::uint32_t x) const {
  if (x >= transversal_slot.size() || transversal_slot[x] == 0) return nullptr;
  return &transversal[transversal_slot[x] - 1];
}

bool Bsgs::qualifies(const Permutation& g, std::size_t level) const {
  for (std::size_t i = 0; i < level; ++i)
    if (g[levels_[i].base_point] != levels_[i].base_point) return false;
  return true;
}

void Bsgs::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  std::vector<const Permutation*> gens;
  for (const Permutation& g : strong_)
    if (qualifies(g, level)) gens.push_back(&g);

  lv.transversal_slot.assign(degree_, 0);
  lv.transversal.clear();
  lv.orbit.clear();
  lv.transversal.push_back(Permutation(degree_));
  lv.transversal_slot[lv.base_point] = 1;
  lv.orbit.push_back(lv.base_point);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    std::uint32_t x = lv.orbit[head];
    for (const Permutation* s : gens) {
      std::uint32_t y = (*s)[x];
      if (lv.transversal_slot[y] == 0) {
        lv.transversal.push_back(
            compose(lv.transversal[lv.transversal_slot[x] - 1], *s));
        lv.transversal_slot[y] = static_cast<std::uint32_t>(lv.transversal.size());
        lv.orbit.push_back(y);
      }
    }
  }
}

bool Bsgs::strip(const Permutation& p, std::size_t from_level,
                 Permutation* residue, std::size_t* drop_level) const {
  Permutation current = p;
  for (std::size_t j = from_level; j < levels_.size(); ++j) {
    std::uint32_t x = current[levels_[j].base_point];
    const Permutation* rep = levels_[j].representative(x);
    if (rep == nullptr) {
      if (residue) *residue = std::move(current);
      if (drop_level) *drop_level = j;
      return false;
    }
    current = compose(current, inverse(*rep));
  }
  if (current.is_identity()) return true;
  if (residue) *residue = std::move(current);
  if (drop_level) *drop_level = levels_.size();
  return false;
}

Bsgs::Bsgs(std::vector<Permutation> generators)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw InvalidArgument("Bsgs: generator list is empty");
  degree_ = generators_[0].degree();
  for (const Permutation& g : generators_)
    if (g.degree() != degree_)
      throw InvalidArgument("Bsgs: generators have mixed degrees");

  for (const Permutation& g : generators_) {
    if (g.is_identity()) continue;
    strong_.push_back(g);
  }
  if (!strong_.empty()) {
    std::uint32_t b = 0;
    while (b < degree_) {
      bool moved = false;
      for (const Permutation& g : strong_)
        if (g[b] != b) {
          moved = true;
          break;
        }
      if (moved) break;
      ++b;
    }
    Level first;
    first.base_point = b;
    levels_.push_back(std::move(first));
    rebuild_orbit(0);
  }

  // Fixpoint closure: when no Schreier generator of any level fails to sift
  // through the later levels, the chain is certified and the order is the
  // product of the orbit sizes.  Every insertion strictly grows an orbit or
  // appends a level, so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t level = 0; !changed && level < levels_.size(); ++level) {
      const std::size_t gen_count = strong_.size();
      for (std::size_t oi = 0;
           !changed && oi < levels_[level].orbit.size(); ++oi) {
        const std::uint32_t x = levels_[level].orbit[oi];
        for (std::size_t gi = 0; gi < gen_count; ++gi) {
          const Permutation& s = strong_[gi];
          if (!qualifies(s, level)) continue;
          const Level& lv = levels_[level];
          Permutation schreier = compose(compose(*lv.representative(x), s),
                                         inverse(*lv.representative(s[x])));
          if (schreier.is_identity()) continue;
          Permutation residue;
          std::size_t drop = 0;
          if (!strip(schreier, level + 1, &residue, &drop)) {
            if (drop == levels_.size()) {
              std::uint32_t b = 0;
              while (residue[b] == b) ++b;  // residue is never the identity
              Level fresh;
              fresh.base_point = b;
              levels_.push_back(std::move(fresh));
            }
            strong_.push_back(std::move(residue));
            for (std::size_t j = 0; j <= drop; ++j) rebuild_orbit(j);
            changed = true;
            break;
          }
        }
      }
    }
  }

  order_ = 1;
  for (const Level& lv : levels_) order_ *= lv.orbit.size();
}

bool Bsgs::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (p.is_identity()) return true;
  return strip(p, 0, nullptr, nullptr);
}

}  // namespace bdg
