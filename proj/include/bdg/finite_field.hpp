#ifndef BDG_FINITE_FIELD_HPP_
#define BDG_FINITE_FIELD_HPP_

#include <cstdint>
#include <vector>

namespace bdg {

/// Small finite field GF(p^k).  Elements are integers in [0, p^k) read as
/// base-p digit vectors, i.e. polynomials in the residue class of X with the
/// constant term in the lowest digit.  The reducing polynomial is the
/// lexicographically least monic irreducible of degree k (smallest value of
/// its non-leading coefficients encoded base p).
class FiniteField {
 public:
  /// Throws InvalidArgument unless p is prime, k >= 1, and p^k fits the
  /// supported range.
  FiniteField(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Non-leading coefficients of the reducing polynomial, low to high.
  const std::vector<std::uint64_t>& modulus() const { return poly_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  /// The residue class of X itself (a degree-k basis generator); equals p
  /// when k > 1, and the smallest primitive root mod p makes no sense here,
  /// so for k = 1 this is simply 1.
  std::uint64_t x() const { return k_ > 1 ? p_ : 1; }

  /// A multiplicative generator of GF(p^k)*, the least in element encoding.
  std::uint64_t generator() const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> poly_;
};

}  // namespace bdg

#endif  // BDG_FINITE_FIELD_HPP_
