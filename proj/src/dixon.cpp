#include "bdg/dixon.hpp"

#include <algorithm>
#include <utility>

#include "bdg/arith.hpp"
#include "bdg/class_algebra.hpp"
#include "bdg/error.hpp"
#include "bdg/modular.hpp"

namespace bdg {

namespace {

// Barrett reduction for a fixed odd modulus; inner loops accumulate raw
// 64-bit sums of products and reduce once at the end.
struct Barrett {
  std::uint64_t p;
  std::uint64_t magic;  // floor((2^64 - 1) / p)

  explicit Barrett(std::uint64_t modulus)
      : p(modulus), magic(~std::uint64_t{0} / modulus) {}

  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * magic >> 64);
    std::uint64_t r = x - q * p;
    while (r >= p) r -= p;
    return r;
  }
};

using Row = std::vector<std::uint64_t>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form; returns the pivot columns.  Entries must
// be reduced on input and are reduced on output.
std::vector<std::size_t> rref(Matrix& m, const Barrett& br) {
  const std::uint64_t p = br.p;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    std::uint64_t val = 0;
    while (sel < rows) {
      val = br.reduce(m[sel][c]);
      m[sel][c] = val;
      if (val != 0) break;
      ++sel;
    }
    if (sel == rows) continue;
    std::swap(m[rank], m[sel]);
    Row& pr = m[rank];
    const std::uint64_t inv = modinv(val, p);
    for (std::size_t k = c; k < cols; ++k)
      pr[k] = br.reduce(br.reduce(pr[k]) * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      std::uint64_t f = br.reduce(m[i][c]);
      if (f == 0) {
        m[i][c] = 0;
        continue;
      }
      Row& ri = m[i];
      ri[c] = 0;
      // Unreduced accumulation, bounded by cols * p^2 for reduced factors.
      for (std::size_t k = c + 1; k < cols; ++k) ri[k] += f * (p - pr[k]);
    }
    pivots.push_back(c);
    ++rank;
  }
  for (Row& row : m)
    for (std::uint64_t& x : row) x = br.reduce(x);
  return pivots;
}

// Characteristic polynomial of a square matrix, monic, coefficients
// low-to-high.  Destroys its input: the matrix is reduced to Hessenberg form
// first, then the leading-minor recurrence assembles the polynomial.
Row charpoly(Matrix a, const Barrett& br) {
  const std::uint64_t p = br.p;
  const std::size_t n = a.size();
  if (n == 0) return {1};

  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t sel = j + 1;
    while (sel < n && a[sel][j] == 0) ++sel;
    if (sel == n) continue;
    if (sel != j + 1) {
      std::swap(a[sel], a[j + 1]);
      for (std::size_t k = 0; k < n; ++k) std::swap(a[k][sel], a[k][j + 1]);
    }
    const std::uint64_t pinv = modinv(a[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      std::uint64_t f = br.reduce(a[i][j] * pinv);
      if (f == 0) continue;
      const Row& pr = a[j + 1];
      Row& ri = a[i];
      for (std::size_t k = j; k < n; ++k)
        ri[k] = br.reduce(ri[k] + f * (p - pr[k]));
      for (std::size_t k = 0; k < n; ++k)
        a[k][j + 1] = br.reduce(a[k][j + 1] + f * a[k][i]);
    }
  }

  // c_k(x) = (x - h[k-1][k-1]) c_{k-1}(x)
  //          - sum_m h[m][k-1] (prod of subdiagonals between) c_m(x).
  std::vector<Row> c(n + 1);
  c[0] = {1};
  std::vector<std::uint64_t> acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc.assign(k + 1, 0);
    const Row& prev = c[k - 1];
    const std::uint64_t diag = a[k - 1][k - 1];
    for (std::size_t t = 0; t < prev.size(); ++t) {
      acc[t + 1] += prev[t];
      acc[t] += prev[t] * (p - diag) % p;
    }
    std::uint64_t beta = 1;
    for (std::size_t m = k - 1; m-- > 0;) {
      // beta = h[m+1][m] * h[m+2][m+1] * ... * h[k-1][k-2]
      beta = br.reduce(beta * a[m + 1][m]);
      if (beta == 0) break;
      std::uint64_t coef = br.reduce(beta * a[m][k - 1]);
      if (coef == 0) continue;
      coef = p - coef;
      const Row& cm = c[m];
      for (std::size_t t = 0; t < cm.size(); ++t) acc[t] += coef * cm[t] % p;
    }
    c[k].resize(k + 1);
    for (std::size_t t = 0; t <= k; ++t) c[k][t] = br.reduce(acc[t]);
  }
  return c[n];
}

// All roots in F_p with multiplicities, by scanning the field and deflating.
// Throws if the polynomial does not split (the class-matrix spectra always
// lie in F_p for a valid modulus).
std::vector<std::pair<std::uint64_t, std::size_t>> roots_with_multiplicity(
    Row poly, const Barrett& br) {
  const std::uint64_t p = br.p;
  std::vector<std::pair<std::uint64_t, std::size_t>> result;
  std::size_t degree = poly.size() - 1;
  for (std::uint64_t x = 0; x < p && degree > 0; ++x) {
    // Horner from the top coefficient.
    std::uint64_t v = 0;
    for (std::size_t t = degree + 1; t-- > 0;) v = br.reduce(v * x + poly[t]);
    if (v != 0) continue;
    std::size_t mult = 0;
    while (degree > 0) {
      // Synthetic division by (X - x); remainder must be zero to count.
      Row q(degree);
      std::uint64_t carry = 0;
      for (std::size_t t = degree; t-- > 0;) {
        carry = br.reduce(carry * x + poly[t + 1]);
        q[t] = carry;
      }
      std::uint64_t rem = br.reduce(carry * x + poly[0]);
      if (rem != 0) break;
      poly = std::move(q);
      --degree;
      ++mult;
    }
    result.emplace_back(x, mult);
  }
  if (degree > 0)
    throw InternalError("characteristic polynomial does not split mod p");
  return result;
}

// Kernel basis of (a - lambda I); rows of the result are coordinate vectors.
Matrix shifted_kernel(const Matrix& a, std::uint64_t lambda, const Barrett& br) {
  const std::uint64_t p = br.p;
  const std::size_t n = a.size();
  Matrix w(n, Row(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    w[i][i] = br.reduce(w[i][i] + p - lambda);
  }

  std::vector<std::size_t> pivot_col;
  std::vector<char> is_pivot(n, 0);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t sel = rank;
    std::uint64_t val = 0;
    while (sel < n) {
      val = br.reduce(w[sel][c]);
      w[sel][c] = val;
      if (val != 0) break;
      ++sel;
    }
    if (sel == n) continue;
    std::swap(w[rank], w[sel]);
    Row& pr = w[rank];
    const std::uint64_t inv = modinv(val, p);
    for (std::size_t k = c; k < n; ++k) pr[k] = br.reduce(br.reduce(pr[k]) * inv);
    for (std::size_t i = rank + 1; i < n; ++i) {
      std::uint64_t f = br.reduce(w[i][c]);
      if (f == 0) {
        w[i][c] = 0;
        continue;
      }
      Row& ri = w[i];
      ri[c] = 0;
      // Unreduced accumulation; bounded by n * p^2 which fits in 64 bits
      // for the moduli this pipeline selects.
      for (std::size_t k = c + 1; k < n; ++k) ri[k] += f * (p - pr[k]);
    }
    pivot_col.push_back(c);
    is_pivot[c] = 1;
    ++rank;
  }

  Matrix kernel;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Row x(n, 0);
    x[c] = 1;
    for (std::size_t t = rank; t-- > 0;) {
      const std::size_t pc = pivot_col[t];
      if (pc > c) continue;
      std::uint64_t sum = 0;
      const Row& rt = w[t];
      for (std::size_t k = pc + 1; k < n; ++k)
        if (x[k]) sum += rt[k] * x[k] % p;
      sum = br.reduce(sum);
      x[pc] = sum == 0 ? 0 : p - sum;
    }
    kernel.push_back(std::move(x));
  }
  return kernel;
}

struct Subspace {
  Matrix basis;                 // RREF rows, vectors over the class indices
  std::vector<std::size_t> pivots;
};

struct SparseEntry {
  std::uint32_t j;
  std::uint32_t k;
  std::uint64_t val;
};

// Matrix of the class-matrix action restricted to the subspace, in its basis.
Matrix restrict_action(const std::vector<SparseEntry>& m, const Subspace& s,
                       std::size_t r, const Barrett& br) {
  const std::size_t d = s.basis.size();
  Matrix images(d, Row(r, 0));
  for (std::size_t t = 0; t < d; ++t) {
    const Row& b = s.basis[t];
    Row& img = images[t];
    for (const SparseEntry& e : m) img[e.j] += e.val * b[e.k] % br.p;
  }
  Matrix result(d, Row(d));
  for (std::size_t sidx = 0; sidx < d; ++sidx)
    for (std::size_t t = 0; t < d; ++t)
      result[sidx][t] = br.reduce(images[t][s.pivots[sidx]]);
  return result;
}

bool is_scalar(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != (i == j ? m[0][0] : 0)) return false;
  return true;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> simultaneous_eigenvectors(
    const Group& g, const ConjugacyClasses& classes, std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 25))
    throw InvalidArgument("simultaneous_eigenvectors: modulus too large");
  const Barrett br(p);
  const std::size_t r = classes.count();
  // Delayed-reduction loops accumulate up to r products below p^2 in 64 bits.
  if (static_cast<unsigned __int128>(p) * p * r >= (static_cast<unsigned __int128>(1) << 63))
    throw InvalidArgument("simultaneous_eigenvectors: problem too large for the modulus");

  std::vector<Subspace> spaces;
  {
    Subspace full;
    full.basis.assign(r, Row(r, 0));
    full.pivots.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      full.basis[i][i] = 1;
      full.pivots[i] = i;
    }
    spaces.push_back(std::move(full));
  }

  std::size_t unsplit = r > 1 ? 1 : 0;
  for (std::size_t i = 1; i < r && unsplit > 0; ++i) {
    std::vector<std::uint64_t> dense = class_matrix(g, classes, i);
    std::vector<SparseEntry> sparse;
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (std::uint64_t v = dense[j * r + k] % p)
          sparse.push_back({static_cast<std::uint32_t>(j),
                            static_cast<std::uint32_t>(k), v});
    dense.clear();
    dense.shrink_to_fit();

    std::vector<Subspace> next;
    for (Subspace& s : spaces) {
      const std::size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      Matrix rm = restrict_action(sparse, s, r, br);
      if (is_scalar(rm)) {
        next.push_back(std::move(s));
        continue;
      }
      auto eigenvalues = roots_with_multiplicity(charpoly(rm, br), br);
      std::size_t found = 0;
      for (const auto& [lambda, mult] : eigenvalues) {
        Matrix coords = shifted_kernel(rm, lambda, br);
        if (coords.size() != mult)
          throw InternalError("class matrix is not semisimple mod p");
        found += mult;
        Subspace child;
        child.basis.assign(coords.size(), Row(r, 0));
        for (std::size_t t = 0; t < coords.size(); ++t) {
          Row& out = child.basis[t];
          for (std::size_t u = 0; u < d; ++u) {
            const std::uint64_t cu = coords[t][u];
            if (cu == 0) continue;
            const Row& b = s.basis[u];
            for (std::size_t k = 0; k < r; ++k) out[k] += cu * b[k] % p;
          }
          for (std::size_t k = 0; k < r; ++k) out[k] = br.reduce(out[k]);
        }
        child.pivots = rref(child.basis, br);
        if (child.pivots.size() != child.basis.size())
          throw InternalError("eigenspace basis degenerated");
        if (child.basis.size() > 1) ++unsplit;
        next.push_back(std::move(child));
      }
      if (found != d)
        throw InternalError("eigenvalue multiplicities do not cover subspace");
      --unsplit;
    }
    spaces = std::move(next);
  }

  if (spaces.size() != r)
    throw InternalError("class matrices failed to separate the characters");

  std::vector<std::vector<std::uint64_t>> result;
  result.reserve(r);
  for (const Subspace& s : spaces) {
    Row v = s.basis[0];
    if (v[0] == 0)
      throw InternalError("eigenvector vanishes on the identity class");
    const std::uint64_t scale = modinv(v[0], p);
    for (std::uint64_t& x : v) x = br.reduce(x * scale);
    result.push_back(std::move(v));
  }
  return result;
}

DegreeData character_degrees(const Group& g) {
  DegreeData data;
  data.order = g.order();

  const ConjugacyClasses classes = conjugacy_classes(g);
  data.classes = classes.count();
  data.prime = choose_dixon_prime(data.order, g.exponent());
  const std::uint64_t p = data.prime;
  const Barrett br(p);

  const auto omegas = simultaneous_eigenvectors(g, classes, p);

  std::vector<std::uint64_t> size_inv(classes.count());
  for (std::size_t k = 0; k < classes.count(); ++k)
    size_inv[k] = modinv(classes.sizes[k] % p, p);
  const std::uint64_t order_mod = data.order % p;

  std::vector<std::uint64_t> candidates;  // divisors d of |G| with d^2 <= |G|
  for (std::uint64_t d : divisors(data.order))
    if (d * d <= data.order) candidates.push_back(d);

  for (const auto& omega : omegas) {
    // chi(1)^2 = |G| / sum_k omega_k omega_{k^-1} / |C_k|  (orthogonality).
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < omega.size(); ++k) {
      std::uint64_t term =
          br.reduce(omega[k] * omega[classes.inverse_class[k]]);
      s = br.reduce(s + term * size_inv[k]);
    }
    if (s == 0) throw InternalError("degenerate character norm");
    const std::uint64_t target = br.reduce(order_mod * modinv(s, p));
    std::uint64_t degree = 0;
    for (std::uint64_t d : candidates)
      if (br.reduce(d % p * (d % p)) == target) {
        degree = d;
        break;
      }
    if (degree == 0) throw InternalError("no degree lift matches the residue");
    data.degrees.push_back(degree);
  }
  std::sort(data.degrees.begin(), data.degrees.end());

  std::uint64_t square_sum = 0;
  for (std::uint64_t d : data.degrees) square_sum += d * d;
  if (square_sum != data.order)
    throw InternalError("degree squares do not sum to the group order");

  data.cd = data.degrees;
  data.cd.erase(std::unique(data.cd.begin(), data.cd.end()), data.cd.end());
  for (std::uint64_t d : data.cd)
    if (d > 1) data.cd_star.push_back(d);
  std::vector<std::uint64_t> rho;
  for (std::uint64_t d : data.cd_star)
    for (const auto& [q, e] : factorize(d)) rho.push_back(q);
  std::sort(rho.begin(), rho.end());
  rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
  data.rho = std::move(rho);
  return data;
}

}  // namespace bdg
