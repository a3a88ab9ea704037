#include "bdg/modular.hpp"

#include <cmath>

#include "bdg/error.hpp"

namespace bdg {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw InvalidArgument("modinv: zero has no inverse");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set decides primality for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t choose_dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  if (order == 0 || exponent == 0)
    throw InvalidArgument("choose_dixon_prime: order and exponent must be positive");
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order)));
  while (root * root < order) ++root;
  while (root > 0 && (root - 1) * (root - 1) >= order) --root;
  const std::uint64_t floor_bound = 2 * root;  // need p > 2*ceil(sqrt(order))
  std::uint64_t p = exponent + 1;
  while (p <= floor_bound || !is_prime(p)) p += exponent;
  return p;
}

std::uint64_t primitive_root_of_unity(std::uint64_t p, std::uint64_t order) {
  if (order == 0 || (p - 1) % order != 0)
    throw InvalidArgument("primitive_root_of_unity: order does not divide p-1");
  for (std::uint64_t g = 1; g < p; ++g) {
    std::uint64_t w = powmod(g, (p - 1) / order, p);
    // w^order = 1 by construction; check no smaller power hits 1.
    bool primitive = true;
    std::uint64_t x = w;
    for (std::uint64_t k = 1; k < order; ++k) {
      if (x == 1) {
        primitive = false;
        break;
      }
      x = mulmod(x, w, p);
    }
    if (primitive) return w;
  }
  throw InternalError("primitive_root_of_unity: search exhausted");
}

}  // namespace bdg
