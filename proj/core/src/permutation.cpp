#include "bsym/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "bsym/error.hpp"

namespace bsym {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) throw PreconditionError("image array is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const Point x = cycle[k];
      if (x >= degree) throw PreconditionError("cycle point out of range");
      if (used[x]) throw PreconditionError("cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  Point max_point = 0;
  bool any_point = false;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation '" + std::string(text) + "'");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle in permutation '" + std::string(text) + "'");
      }
      Point value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<Point>(text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
      max_point = std::max(max_point, value);
      any_point = true;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  if (degree == 0) degree = any_point ? max_point + 1 : 0;
  if (any_point && max_point >= degree) throw ParseError("permutation point exceeds degree");
  try {
    return from_cycles(degree, cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) inv[images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(inv), Unchecked{});
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

bool Permutation::has_fixed_point() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] == x) return true;
  }
  return false;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) out += ' ';
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PreconditionError("composing permutations of different degree");
  std::vector<Point> images(a.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = a.images_[b.images_[x]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& h, const Permutation& p) { return p * h * p.inverse(); }

bool commute(const Permutation& a, const Permutation& b) {
  for (std::size_t x = 0; x < a.degree(); ++x) {
    if (a(b(static_cast<Point>(x))) != b(a(static_cast<Point>(x)))) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bsym
