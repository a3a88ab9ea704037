#include <cstdint>
#include <random>
#include <set>

#include "doctest.h"

#include "bdg/error.hpp"
#include "bdg/finite_field.hpp"

using bdg::FiniteField;

TEST_CASE("construction validates parameters") {
  CHECK_THROWS_AS(FiniteField(4, 2), bdg::InvalidArgument);   // 4 not prime
  CHECK_THROWS_AS(FiniteField(6, 1), bdg::InvalidArgument);
  CHECK_THROWS_AS(FiniteField(2, 0), bdg::InvalidArgument);
  CHECK(FiniteField(2, 1).size() == 2);
  CHECK(FiniteField(3, 4).size() == 81);
}

TEST_CASE("reducing polynomial is the lex-least monic irreducible") {
  // GF(4): X^2 + X + 1 is the only irreducible quadratic over F_2.
  CHECK(FiniteField(2, 2).modulus() == std::vector<std::uint64_t>{1, 1});
  // GF(9): X^2 + 1 (encoding 1) is irreducible since -1 is a non-square
  // mod 3, and nothing encodes smaller.
  CHECK(FiniteField(3, 2).modulus() == std::vector<std::uint64_t>{1, 0});
  // GF(8): X^3 + X + 1 beats X^3 + X^2 + 1 (encodings 3 vs 5).
  CHECK(FiniteField(2, 3).modulus() == std::vector<std::uint64_t>{1, 1, 0});
}

TEST_CASE("prime field arithmetic is arithmetic mod p") {
  FiniteField f(7, 1);
  CHECK(f.x() == 1);
  for (std::uint64_t a = 0; a < 7; ++a)
    for (std::uint64_t b = 0; b < 7; ++b) {
      CHECK(f.add(a, b) == (a + b) % 7);
      CHECK(f.mul(a, b) == (a * b) % 7);
      CHECK(f.sub(a, b) == (a + 7 - b) % 7);
    }
}

TEST_CASE("field axioms hold on sampled triples") {
  std::mt19937_64 rng(2024);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 4},
                      {3, 3}, {5, 2}, {7, 2}, {31, 1}}) {
    FiniteField f(p, k);
    const std::uint64_t q = f.size();
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      // Frobenius endomorphism: (a + b)^p = a^p + b^p.
      CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
}

TEST_CASE("every nonzero element is invertible") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 5},
                      {3, 3}, {5, 3}, {11, 2}}) {
    FiniteField f(p, k);
    for (std::uint64_t a = 1; a < f.size(); ++a) {
      const std::uint64_t ai = f.inv(a);
      CHECK(f.mul(a, ai) == 1);
      CHECK(f.pow(a, f.size() - 1) == 1);  // Lagrange
    }
    CHECK_THROWS_AS(f.inv(0), bdg::InvalidArgument);
  }
}

TEST_CASE("generator has full multiplicative order") {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 4},
                      {3, 2}, {5, 2}, {13, 1}}) {
    FiniteField f(p, k);
    const std::uint64_t g = f.generator();
    std::set<std::uint64_t> seen;
    std::uint64_t acc = 1;
    for (std::uint64_t e = 0; e + 1 < f.size(); ++e) {
      seen.insert(acc);
      acc = f.mul(acc, g);
    }
    CHECK(acc == 1);                      // g^(q-1) = 1
    CHECK(seen.size() == f.size() - 1);   // all smaller powers distinct
  }
}

TEST_CASE("x generates the field over its prime subfield") {
  FiniteField f(2, 3);
  // 1, x, x^2 are linearly independent: codes 1, 2, 4.
  CHECK(f.x() == 2);
  CHECK(f.mul(f.x(), f.x()) == 4);
  // x^3 = x + 1 under the reducing polynomial X^3 + X + 1.
  CHECK(f.mul(4, f.x()) == 3);
}
