#include "bdg/finite_field.hpp"

#include <algorithm>

#include "bdg/arith.hpp"
#include "bdg/error.hpp"
#include "bdg/modular.hpp"

namespace bdg {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over F_p, b nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = modinv(b.back(), p);
  while (a.size() > db) {
    const std::uint64_t f = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    if (f != 0)
      for (std::size_t i = 0; i <= db; ++i)
        a[shift + i] = (a[shift + i] + (p - mulmod(f, b[i], p))) % p;
    a.pop_back();
    trim(a);
    if (a.size() <= shift) break;
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(c), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility of a monic polynomial of degree k over F_p:
// X^(p^d) - X must be coprime to it for every proper divisor depth, and
// X^(p^k) = X mod it.
bool irreducible(const Poly& f, std::uint64_t p, unsigned k) {
  Poly x{0, 1};
  Poly frob = x;  // X^(p^j) mod f after j steps
  for (unsigned j = 1; j <= k; ++j) {
    // frob = frob^p by square-and-multiply on the exponent p.
    Poly base = frob;
    Poly acc{1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    frob = std::move(acc);
    if (j < k && k % j == 0) {
      // gcd(f, X^(p^j) - X) picks up any irreducible factor of degree j.
      Poly diff = frob;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      trim(diff);
      if (poly_gcd(f, diff, p).size() != 1) return false;
    }
  }
  Poly diff = frob;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  trim(diff);
  return diff.empty();
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p)) throw InvalidArgument("FiniteField: p is not prime");
  if (k == 0) throw InvalidArgument("FiniteField: degree must be positive");
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > (1u << 20))
      throw InvalidArgument("FiniteField: field too large");
  }
  q_ = static_cast<std::uint64_t>(q);

  if (k == 1) {
    poly_ = {0};  // X = 0, i.e. the prime field
    return;
  }
  // Smallest non-leading coefficient encoding that is irreducible.
  for (std::uint64_t code = 0;; ++code) {
    if (code >= q_) throw InternalError("FiniteField: no irreducible found");
    Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[k] = 1;
    if (irreducible(f, p, k)) {
      poly_.assign(f.begin(), f.begin() + k);
      return;
    }
  }
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t out = 0, mul = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += (a % p_ + b % p_) % p_ * mul;
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return out;
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  std::uint64_t out = 0, mul = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += (p_ - a % p_) % p_ * mul;
    a /= p_;
    mul *= p_;
  }
  return out;
}

std::uint64_t FiniteField::sub(std::uint64_t a, std::uint64_t b) const {
  return add(a, neg(b));
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  Poly pa(k_), pb(k_), pm(k_ + 1);
  for (unsigned i = 0; i < k_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
    pm[i] = poly_[i];
  }
  pm[k_] = 1;
  Poly c = k_ == 1 ? Poly{mulmod(pa.empty() ? 0 : pa[0], pb.empty() ? 0 : pb[0], p_)}
                   : poly_mulmod(pa, pb, pm, p_);
  std::uint64_t out = 0, mul = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += (i < c.size() ? c[i] : 0) * mul;
    mul *= p_;
  }
  return out;
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t FiniteField::inv(std::uint64_t a) const {
  if (a == 0) throw InvalidArgument("FiniteField: zero has no inverse");
  return pow(a, q_ - 2);
}

std::uint64_t FiniteField::generator() const {
  const auto factors = factorize(q_ - 1);
  for (std::uint64_t g = 1; g < q_; ++g) {
    bool primitive = true;
    for (const auto& [f, e] : factors)
      if (pow(g, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw InternalError("FiniteField: no multiplicative generator");
}

}  // namespace bdg
