#ifndef BDG_GROUP_HPP_
#define BDG_GROUP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bdg/permutation.hpp"
#include "bdg/schreier_sims.hpp"

namespace bdg {

/// Default cap on the number of elements any group may be asked to list.
inline constexpr std::uint64_t kDefaultEnumerationBound = 2'000'000;

/// A finite group behind a uniform interface.  Two backings exist:
/// permutation groups (BSGS-driven, exact order known up front) and
/// constructed groups (elements are opaque 64-bit codes with a caller-supplied
/// multiplication rule, order established by closure).
///
/// Enumerated elements are addressed by index.  Index 0 is always the
/// identity; the remaining order is canonical: lexicographic on image arrays
/// for permutation groups, breadth-first insertion order for constructed
/// groups.  All enumeration-dependent calls throw EnumerationError when the
/// group exceeds the enumeration bound.
class Group {
 public:
  using Index = std::uint32_t;

  /// Multiplication table rule for a constructed group.
  struct Construction {
    std::uint64_t identity = 0;
    std::vector<std::uint64_t> generators;
    std::function<std::uint64_t(std::uint64_t, std::uint64_t)> mult;
    std::function<std::uint64_t(std::uint64_t)> inv;
  };

  explicit Group(std::vector<Permutation> generators,
                 std::uint64_t enumeration_bound = kDefaultEnumerationBound);
  explicit Group(Construction construction,
                 std::uint64_t enumeration_bound = kDefaultEnumerationBound);

  Group(Group&&) = default;
  Group& operator=(Group&&) = default;

  std::uint64_t order() const;
  std::uint64_t enumeration_bound() const { return bound_; }

  bool permutation_backed() const { return bsgs_ != nullptr; }
  std::size_t degree() const;
  const Bsgs& bsgs() const;
  bool contains(const Permutation& p) const;

  /// Number of enumerated elements; equals order().
  Index size() const;
  Index mult(Index a, Index b) const;
  Index inv(Index a) const;
  /// b^-1 * a * b.
  Index conj(Index a, Index b) const;
  const std::vector<Index>& generator_indices() const;
  std::uint64_t element_order(Index a) const;
  /// lcm of all element orders.
  std::uint64_t exponent() const;

  Permutation permutation(Index a) const;  // permutation-backed only
  std::string element_repr(Index a) const;

 private:
  struct Enumeration {
    Index count = 0;
    // Permutation backing: elements stored contiguously in lexicographic
    // order, `deg` points each; index lookup is binary search.
    std::size_t deg = 0;
    std::vector<std::uint16_t> flat;
    // Constructed backing: codes in BFS order plus a reverse map.
    std::vector<std::uint64_t> codes;
    std::unordered_map<std::uint64_t, Index> code_index;

    std::vector<Index> inv_index;
    std::vector<Index> gen_index;
    std::uint64_t exponent = 1;
  };

  static constexpr std::size_t kMaxDegreeOnStack = 4096;

  const Enumeration& enumerated() const;
  void enumerate_permutations(Enumeration& e) const;
  void enumerate_codes(Enumeration& e) const;
  static Index index_of_flat_impl(const Enumeration& e,
                                  const std::uint16_t* images);

  std::uint64_t bound_ = kDefaultEnumerationBound;
  std::unique_ptr<Bsgs> bsgs_;
  std::vector<Permutation> perm_generators_;
  std::unique_ptr<Construction> construction_;

  mutable std::unique_ptr<Enumeration> enum_;
};

}  // namespace bdg

#endif  // BDG_GROUP_HPP_
