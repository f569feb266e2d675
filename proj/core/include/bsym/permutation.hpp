#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsym {

using Point = std::uint32_t;

/// A bijection of {0, ..., m-1}. Composition follows function notation:
/// (p * q)(x) = p(q(x)).
class Permutation {
public:
  Permutation() = default;
  /// Validates that `images` is a bijection; throws PreconditionError otherwise.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images) : Permutation(std::vector<Point>(images)) {}

  static Permutation identity(std::size_t degree);
  /// Builds a permutation of the given degree from disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parses "(0 1)(2 3)" or "()" (commas also accepted as separators). The
  /// degree is the given one, or 1 + the largest point mentioned when 0.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order of the permutation as a group element.
  std::size_t order() const;
  bool has_fixed_point() const;

  /// Disjoint cycle notation with 0-based points; identity is "()".
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

/// Conjugate p h p^-1.
Permutation conjugate(const Permutation& h, const Permutation& p);

bool commute(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace bsym
