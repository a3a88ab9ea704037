#include "bdg/derived_series.hpp"

#include <algorithm>
#include <unordered_set>

namespace bdg {

namespace {

// Grows `members` to the subgroup generated by `seed` elements, then keeps
// closing under conjugation by `conjugators`.  Returns the sorted element list.
std::vector<Group::Index> normal_closure(const Group& g,
                                         const std::vector<Group::Index>& seed,
                                         const std::vector<Group::Index>& conjugators) {
  std::unordered_set<Group::Index> members;
  std::vector<Group::Index> queue;
  members.insert(0);
  queue.push_back(0);

  std::vector<Group::Index> gens;
  auto add = [&](Group::Index x) {
    if (members.insert(x).second) queue.push_back(x);
  };
  for (Group::Index s : seed)
    if (members.find(s) == members.end()) {
      gens.push_back(s);
      add(s);
    }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    Group::Index x = queue[head];
    // Close under right multiplication by the current generator set.
    for (std::size_t gi = 0; gi < gens.size(); ++gi) add(g.mult(x, gens[gi]));
    // Conjugates of members that escape become new generators.
    for (Group::Index c : conjugators) {
      Group::Index y = g.conj(x, c);
      if (members.find(y) == members.end()) {
        gens.push_back(y);
        add(y);
        // New generator: re-multiply everything dequeued so far against it.
        for (std::size_t i = 0; i <= head; ++i) add(g.mult(queue[i], y));
      }
    }
  }

  std::vector<Group::Index> result(members.begin(), members.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::vector<Group::Index> commutator_subgroup(
    const Group& g, const std::vector<Group::Index>& h_gens) {
  std::vector<Group::Index> commutators;
  for (Group::Index x : h_gens)
    for (Group::Index y : h_gens) {
      // [x, y] = x^-1 y^-1 x y
      Group::Index c = g.mult(g.mult(g.inv(x), g.inv(y)), g.mult(x, y));
      if (c != 0) commutators.push_back(c);
    }
  return normal_closure(g, commutators, h_gens);
}

DerivedSeriesReport derived_series(const Group& g) {
  DerivedSeriesReport report;
  std::vector<Group::Index> term_gens = g.generator_indices();
  report.subgroup_orders.push_back(g.size());

  while (true) {
    std::vector<Group::Index> next = commutator_subgroup(g, term_gens);
    if (next.size() == report.subgroup_orders.back()) break;  // stabilized
    report.subgroup_orders.push_back(next.size());
    if (next.size() == 1) break;
    term_gens = std::move(next);  // whole subgroup works as a generating set
  }

  report.solvable = report.subgroup_orders.back() == 1;
  report.derived_length =
      report.solvable ? report.subgroup_orders.size() - 1 : 0;
  return report;
}

}  // namespace bdg
