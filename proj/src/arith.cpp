#include "bdg/arith.hpp"

#include <algorithm>
#include <numeric>

#include "bdg/error.hpp"
#include "bdg/modular.hpp"

namespace bdg {

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
  std::map<std::uint64_t, unsigned> result;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++result[p];
      n /= p;
    }
  }
  if (n > 1) ++result[n];
  return result;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw InvalidArgument("p_part: bad arguments");
  std::uint64_t result = 1;
  while (n % p == 0) {
    result *= p;
    n /= p;
  }
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("divisors: zero has no divisor list");
  std::vector<std::uint64_t> result{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t old = result.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < old; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

namespace {

// Pollard's rho (Brent variant) for composites whose factors exceed the
// trial-division range used below.
std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_large(std::uint64_t n, std::map<std::uint64_t, unsigned>* out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++(*out)[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> primitive_prime_divisors(std::uint64_t q, unsigned n) {
  if (q < 2 || n == 0)
    throw InvalidArgument("primitive_prime_divisors: need q >= 2, n >= 1");

  using U128 = unsigned __int128;
  const U128 limit = ~U128{0};
  U128 qn = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (qn > limit / q)
      throw InvalidArgument("primitive_prime_divisors: q^n out of range");
    qn *= q;
  }

  auto gcd128 = [](U128 a, U128 b) {
    while (b != 0) {
      const U128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };

  // Strip every prime that already divides some q^d - 1 with d a proper
  // divisor of n; repeat since a prime may divide star to a higher power.
  // q^n - 1 may exceed 64 bits, but the stripped remainder divides the
  // n-th cyclotomic value and is checked to fit below.
  U128 star = qn - 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    U128 qd = 1;
    for (std::uint64_t i = 0; i < d; ++i) qd *= q;
    U128 g = gcd128(star, qd - 1);
    while (g > 1) {
      star /= g;
      g = gcd128(star, g);
    }
  }
  if (star > ~std::uint64_t{0})
    throw InvalidArgument(
        "primitive_prime_divisors: primitive part exceeds 64 bits");

  // What remains is a product of primes z with ord_z(q) = n exactly.
  std::map<std::uint64_t, unsigned> factors;
  std::uint64_t rest = static_cast<std::uint64_t>(star);
  for (std::uint64_t p = 2; p < 100000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++factors[p];
      rest /= p;
    }
  }
  factor_large(rest, &factors);

  std::vector<std::uint64_t> result;
  for (const auto& [p, e] : factors) result.push_back(p);
  return result;
}

}  // namespace bdg
