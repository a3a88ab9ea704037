#ifndef BDG_DIXON_HPP_
#define BDG_DIXON_HPP_

#include <cstdint>
#include <vector>

#include "bdg/conjugacy.hpp"
#include "bdg/group.hpp"

namespace bdg {

/// Irreducible character degree data for a finite group.
struct DegreeData {
  std::uint64_t order = 0;
  std::uint64_t prime = 0;           // working modulus
  std::size_t classes = 0;
  std::vector<std::uint64_t> degrees;  // all r degrees, ascending (multiset)
  std::vector<std::uint64_t> cd;       // distinct degrees, ascending
  std::vector<std::uint64_t> cd_star;  // cd without 1
  std::vector<std::uint64_t> rho;      // primes dividing some degree
};

/// The r common eigenvectors of the class matrices mod p, one per irreducible
/// character, each normalized so the identity-class coordinate is 1.  The
/// k-th coordinate of the eigenvector for chi is |C_k| chi(g_k) / chi(1)
/// reduced mod p.  Requires p = 1 (mod exp(G)) and p > 2*ceil(sqrt(|G|)).
std::vector<std::vector<std::uint64_t>> simultaneous_eigenvectors(
    const Group& g, const ConjugacyClasses& classes, std::uint64_t p);

/// Full pipeline: conjugacy classes, modulus selection, eigenvectors,
/// degree recovery.
DegreeData character_degrees(const Group& g);

}  // namespace bdg

#endif  // BDG_DIXON_HPP_
