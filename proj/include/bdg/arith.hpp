#ifndef BDG_ARITH_HPP_
#define BDG_ARITH_HPP_

#include <cstdint>
#include <map>
#include <vector>

namespace bdg {

/// Prime factorization of n >= 1 as {prime -> multiplicity}; empty for n = 1.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

/// Largest power of the prime p dividing n (1 if p does not divide n).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

/// All positive divisors of n >= 1, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Primes z dividing q^n - 1 that divide q^d - 1 for no 0 < d < n,
/// ascending; equivalently the primes with ord_z(q) = n.
std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t q, unsigned n);

}  // namespace bdg

#endif  // BDG_ARITH_HPP_
