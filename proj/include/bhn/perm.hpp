#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bhn/bigint.hpp"

namespace bhn {

using Point = std::uint32_t;

/// A permutation of {0, ..., d-1} stored as its image table.
///
/// Points are 0-based: the point written k in cycle notation for the
/// generators below is stored at index k - 1.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {0, ..., images.size() - 1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation power(const Permutation&, std::int64_t);
  friend Permutation unchecked_permutation(std::vector<Point>);

  std::vector<Point> images_;
};

/// Builds a permutation from a table the caller guarantees is a bijection.
Permutation unchecked_permutation(std::vector<Point> images);

Permutation identity(std::size_t degree);

/// (p * q)(x) = p(q(x)): the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Permutation inverse(const Permutation& p);

/// p^k for any integer k, in O(degree).
Permutation power(const Permutation& p, std::int64_t k);

/// Least common multiple of the cycle lengths.
BigInt order(const Permutation& p);

/// Moved points in increasing order.
std::vector<Point> support(const Permutation& p);

bool is_even(const Permutation& p);

/// Disjoint cycles of length >= 2, each starting at its smallest point,
/// ordered by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p);

/// The cycle points[0] -> points[1] -> ... -> points[0] on `degree` points.
Permutation cycle_from(std::span<const Point> points, std::size_t degree);
Permutation cycle_from(std::initializer_list<Point> points, std::size_t degree);

/// alpha = x -> x + 1 mod d, beta = (0, r1, r1 + r2).
struct Generators {
  Permutation alpha;
  Permutation beta;
};

/// Requires d odd, d >= 5, r1, r2 >= 1 and r1 + r2 <= d - 1.
Generators make_generators(std::uint64_t d, std::uint64_t r1, std::uint64_t r2);

/// alpha^i beta alpha^-i = (i, r1 + i, r1 + r2 + i) with indices mod d.
Permutation shifted_tripod(std::uint64_t d, std::uint64_t r1, std::uint64_t r2, std::int64_t i);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace bhn
