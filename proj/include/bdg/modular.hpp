#ifndef BDG_MODULAR_HPP_
#define BDG_MODULAR_HPP_

#include <cstdint>

namespace bdg {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint64_t modinv(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime(std::uint64_t n);

/// The smallest prime p with p ≡ 1 (mod exponent) and p > 2*ceil(sqrt(order)),
/// so that character degrees lift uniquely from residues mod p.
std::uint64_t choose_dixon_prime(std::uint64_t order, std::uint64_t exponent);

/// An element of multiplicative order `order` in F_p*; requires order | p-1.
std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint64_t order);

}  // namespace bdg

#endif  // BDG_MODULAR_HPP_
