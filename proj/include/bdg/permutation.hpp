#ifndef BDG_PERMUTATION_HPP_
#define BDG_PERMUTATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bdg/error.hpp"

namespace bdg {

/// A bijection on the points {0, ..., degree-1}, stored as its image array.
class Permutation {
 public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image array; throws InvalidArgument if it is not
  /// a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator[](std::size_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  bool is_identity() const;

  /// Multiplicative order, via the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Lexicographic comparison of image arrays.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Applies `a` first, then `b`.  Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& p);

/// b^-1 * a * b.
Permutation conjugate(const Permutation& a, const Permutation& b);

/// Parses 1-based disjoint cycle notation, e.g. "(1,2)(3,4,5)".  The empty
/// string and "()" denote the identity.  Throws ParseError with a character
/// position on malformed input, out-of-range points or repeated points.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// Inverse of parse_cycles: 1-based disjoint cycles, each starting at its
/// least point, cycles ordered by least point.  Identity prints as "()".
std::string format_cycles(const Permutation& p);

}  // namespace bdg

#endif  // BDG_PERMUTATION_HPP_
