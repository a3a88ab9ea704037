#include "bdg/group.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace bdg {

namespace {

std::uint64_t hash_bytes(const void* data, std::size_t len) {
  // FNV-1a
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Group::Group(std::vector<Permutation> generators, std::uint64_t enumeration_bound)
    : bound_(enumeration_bound),
      bsgs_(std::make_unique<Bsgs>(generators)),
      perm_generators_(std::move(generators)) {
  if (bsgs_->degree() >= kMaxDegreeOnStack)
    throw InvalidArgument("Group: permutation degree out of supported range");
}

Group::Group(Construction construction, std::uint64_t enumeration_bound)
    : bound_(enumeration_bound),
      construction_(std::make_unique<Construction>(std::move(construction))) {
  if (!construction_->mult || !construction_->inv ||
      construction_->generators.empty())
    throw InvalidArgument("Group: incomplete construction rule");
}

std::uint64_t Group::order() const {
  if (bsgs_) return bsgs_->order();
  return enumerated().count;
}

std::size_t Group::degree() const {
  if (!bsgs_) throw InvalidArgument("Group: not permutation-backed");
  return bsgs_->degree();
}

const Bsgs& Group::bsgs() const {
  if (!bsgs_) throw InvalidArgument("Group: not permutation-backed");
  return *bsgs_;
}

bool Group::contains(const Permutation& p) const {
  return bsgs().contains(p);
}

const Group::Enumeration& Group::enumerated() const {
  if (!enum_) {
    auto e = std::make_unique<Enumeration>();
    if (bsgs_)
      enumerate_permutations(*e);
    else
      enumerate_codes(*e);
    enum_ = std::move(e);
  }
  return *enum_;
}

void Group::enumerate_permutations(Enumeration& e) const {
  const std::uint64_t n = bsgs_->order();
  if (n > bound_) {
    std::ostringstream os;
    os << "group of order " << n << " is too large to enumerate (bound "
       << bound_ << ")";
    throw EnumerationError(os.str());
  }
  const std::size_t deg = bsgs_->degree();
  e.deg = deg;

  std::vector<std::uint16_t> flat;
  flat.reserve(static_cast<std::size_t>(n) * deg);

  struct RowHash {
    const std::vector<std::uint16_t>* flat;
    std::size_t deg;
    std::size_t operator()(Index i) const {
      return hash_bytes(flat->data() + static_cast<std::size_t>(i) * deg,
                        deg * sizeof(std::uint16_t));
    }
  };
  struct RowEq {
    const std::vector<std::uint16_t>* flat;
    std::size_t deg;
    bool operator()(Index a, Index b) const {
      return std::memcmp(flat->data() + static_cast<std::size_t>(a) * deg,
                         flat->data() + static_cast<std::size_t>(b) * deg,
                         deg * sizeof(std::uint16_t)) == 0;
    }
  };
  std::unordered_set<Index, RowHash, RowEq> seen(
      16, RowHash{&flat, deg}, RowEq{&flat, deg});
  seen.reserve(static_cast<std::size_t>(n) * 2);

  for (std::size_t x = 0; x < deg; ++x)
    flat.push_back(static_cast<std::uint16_t>(x));
  seen.insert(0);
  Index count = 1;

  std::vector<std::vector<std::uint16_t>> gens;
  for (const Permutation& g : perm_generators_) {
    std::vector<std::uint16_t> row(deg);
    for (std::size_t x = 0; x < deg; ++x)
      row[x] = static_cast<std::uint16_t>(g[x]);
    gens.push_back(std::move(row));
  }

  for (Index head = 0; head < count; ++head) {
    for (const auto& g : gens) {
      const std::size_t base = static_cast<std::size_t>(head) * deg;
      flat.resize(flat.size() + deg);
      std::uint16_t* out = flat.data() + static_cast<std::size_t>(count) * deg;
      const std::uint16_t* in = flat.data() + base;
      for (std::size_t x = 0; x < deg; ++x) out[x] = g[in[x]];
      if (seen.insert(count).second)
        ++count;
      else
        flat.resize(flat.size() - deg);
    }
  }
  if (count != n)
    throw InternalError("enumeration count disagrees with BSGS order");

  // Canonical order: lexicographic on image arrays (identity sorts first).
  std::vector<Index> perm_order(count);
  std::iota(perm_order.begin(), perm_order.end(), 0u);
  const std::uint16_t* data = flat.data();
  std::sort(perm_order.begin(), perm_order.end(), [&](Index a, Index b) {
    return std::memcmp(data + static_cast<std::size_t>(a) * deg,
                       data + static_cast<std::size_t>(b) * deg,
                       deg * sizeof(std::uint16_t)) < 0;
  });
  e.flat.resize(flat.size());
  for (Index i = 0; i < count; ++i)
    std::memcpy(e.flat.data() + static_cast<std::size_t>(i) * deg,
                data + static_cast<std::size_t>(perm_order[i]) * deg,
                deg * sizeof(std::uint16_t));
  e.count = count;

  e.inv_index.resize(count);
  std::vector<std::uint16_t> tmp(deg);
  for (Index i = 0; i < count; ++i) {
    const std::uint16_t* row = e.flat.data() + static_cast<std::size_t>(i) * deg;
    for (std::size_t x = 0; x < deg; ++x) tmp[row[x]] = static_cast<std::uint16_t>(x);
    e.inv_index[i] = index_of_flat_impl(e, tmp.data());
  }

  for (const auto& g : gens)
    e.gen_index.push_back(index_of_flat_impl(e, g.data()));

  std::uint64_t exponent = 1;
  std::vector<bool> mark(deg);
  for (Index i = 0; i < count; ++i) {
    const std::uint16_t* row = e.flat.data() + static_cast<std::size_t>(i) * deg;
    std::fill(mark.begin(), mark.end(), false);
    for (std::size_t start = 0; start < deg; ++start) {
      if (mark[start]) continue;
      std::uint64_t len = 0;
      for (std::size_t x = start; !mark[x]; x = row[x]) {
        mark[x] = true;
        ++len;
      }
      exponent = std::lcm(exponent, len);
    }
  }
  e.exponent = exponent;
}

void Group::enumerate_codes(Enumeration& e) const {
  const auto& c = *construction_;
  e.codes.push_back(c.identity);
  e.code_index.emplace(c.identity, 0u);
  for (std::size_t head = 0; head < e.codes.size(); ++head) {
    for (std::uint64_t g : c.generators) {
      std::uint64_t next = c.mult(e.codes[head], g);
      if (e.code_index.emplace(next, static_cast<Index>(e.codes.size())).second) {
        e.codes.push_back(next);
        if (e.codes.size() > bound_)
          throw EnumerationError("constructed group is too large to enumerate");
      }
    }
  }
  e.count = static_cast<Index>(e.codes.size());

  e.inv_index.resize(e.count);
  for (Index i = 0; i < e.count; ++i)
    e.inv_index[i] = e.code_index.at(c.inv(e.codes[i]));
  for (std::uint64_t g : c.generators)
    e.gen_index.push_back(e.code_index.at(g));

  std::uint64_t exponent = 1;
  for (Index i = 0; i < e.count; ++i) {
    std::uint64_t ord = 1;
    std::uint64_t x = e.codes[i];
    while (x != c.identity) {
      x = c.mult(x, e.codes[i]);
      ++ord;
    }
    exponent = std::lcm(exponent, ord);
  }
  e.exponent = exponent;
}

Group::Index Group::index_of_flat_impl(const Enumeration& e,
                                       const std::uint16_t* images) {
  const std::size_t deg = e.deg;
  const std::uint16_t* data = e.flat.data();
  Index lo = 0, hi = e.count;
  while (lo < hi) {
    Index mid = lo + (hi - lo) / 2;
    int cmp = std::memcmp(data + static_cast<std::size_t>(mid) * deg, images,
                          deg * sizeof(std::uint16_t));
    if (cmp < 0)
      lo = mid + 1;
    else if (cmp > 0)
      hi = mid;
    else
      return mid;
  }
  throw InternalError("element lookup failed: not a group element");
}

Group::Index Group::size() const { return enumerated().count; }

Group::Index Group::mult(Index a, Index b) const {
  const Enumeration& e = enumerated();
  if (bsgs_) {
    const std::size_t deg = e.deg;
    const std::uint16_t* ra = e.flat.data() + static_cast<std::size_t>(a) * deg;
    const std::uint16_t* rb = e.flat.data() + static_cast<std::size_t>(b) * deg;
    std::uint16_t tmp[kMaxDegreeOnStack];
    for (std::size_t x = 0; x < deg; ++x) tmp[x] = rb[ra[x]];
    return index_of_flat_impl(e, tmp);
  }
  return e.code_index.at(construction_->mult(e.codes[a], e.codes[b]));
}

Group::Index Group::inv(Index a) const { return enumerated().inv_index[a]; }

Group::Index Group::conj(Index a, Index b) const {
  const Enumeration& e = enumerated();
  if (bsgs_) {
    const std::size_t deg = e.deg;
    const std::uint16_t* ra = e.flat.data() + static_cast<std::size_t>(a) * deg;
    const std::uint16_t* rb = e.flat.data() + static_cast<std::size_t>(b) * deg;
    const std::uint16_t* rbi =
        e.flat.data() + static_cast<std::size_t>(e.inv_index[b]) * deg;
    std::uint16_t tmp[kMaxDegreeOnStack];
    // (b^-1 a b)(x) = b(a(b^-1(x)))
    for (std::size_t x = 0; x < deg; ++x) tmp[x] = rb[ra[rbi[x]]];
    return index_of_flat_impl(e, tmp);
  }
  const auto& c = *construction_;
  std::uint64_t code =
      c.mult(c.mult(c.inv(e.codes[b]), e.codes[a]), e.codes[b]);
  return e.code_index.at(code);
}

const std::vector<Group::Index>& Group::generator_indices() const {
  return enumerated().gen_index;
}

std::uint64_t Group::element_order(Index a) const {
  const Enumeration& e = enumerated();
  if (bsgs_) {
    const std::size_t deg = e.deg;
    const std::uint16_t* row = e.flat.data() + static_cast<std::size_t>(a) * deg;
    std::uint64_t result = 1;
    std::vector<bool> mark(deg, false);
    for (std::size_t start = 0; start < deg; ++start) {
      if (mark[start]) continue;
      std::uint64_t len = 0;
      for (std::size_t x = start; !mark[x]; x = row[x]) {
        mark[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }
  std::uint64_t ord = 1;
  std::uint64_t x = e.codes[a];
  while (x != construction_->identity) {
    x = construction_->mult(x, e.codes[a]);
    ++ord;
  }
  return ord;
}

std::uint64_t Group::exponent() const { return enumerated().exponent; }

Permutation Group::permutation(Index a) const {
  if (!bsgs_) throw InvalidArgument("Group: not permutation-backed");
  const Enumeration& e = enumerated();
  const std::uint16_t* row = e.flat.data() + static_cast<std::size_t>(a) * e.deg;
  std::vector<std::uint32_t> images(e.deg);
  for (std::size_t x = 0; x < e.deg; ++x) images[x] = row[x];
  return Permutation(std::move(images));
}

std::string Group::element_repr(Index a) const {
  if (bsgs_) return format_cycles(permutation(a));
  std::ostringstream os;
  os << "#" << enumerated().codes[a];
  return os.str();
}

}  // namespace bdg
