#include "bdg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bdg {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw InvalidArgument("image array is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("compose: degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x) images[x] = b[a[x]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) images[p[x]] = x;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  std::vector<std::uint32_t> images(a.degree());
  // b^-1 a b maps b(x) to b(a(x)).
  for (std::size_t x = 0; x < a.degree(); ++x) images[b[x]] = b[a[x]];
  return Permutation(std::move(images));
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) {
  std::ostringstream os;
  os << "cycle notation: " << what << " at position " << pos;
  throw ParseError(os.str());
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  if (degree == 0) throw InvalidArgument("parse_cycles: degree must be >= 1");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') parse_fail("expected '('", i);
    ++i;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!cycle.empty()) {
        if (text[i] != ',') parse_fail("expected ',' or ')'", i);
        ++i;
        skip_ws();
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        parse_fail("expected a point", i);
      std::uint64_t value = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) parse_fail("point out of range", start);
        ++i;
      }
      if (value == 0) parse_fail("points are 1-based", start);
      std::uint32_t point = static_cast<std::uint32_t>(value - 1);
      if (used[point]) parse_fail("repeated point", start);
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
    }
    if (i >= text.size()) parse_fail("unclosed '('", text.size());
    ++i;  // ')'
    for (std::size_t j = 0; j + 1 < cycle.size(); ++j)
      images[cycle[j]] = cycle[j + 1];
    if (cycle.size() > 1) images[cycle.back()] = cycle.front();
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p[start] == start) {
      seen[start] = true;
      continue;
    }
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) os << ',';
      os << (x + 1);
      first = false;
      x = p[x];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace bdg
