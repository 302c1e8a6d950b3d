#include "bhn/perm.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include <fmt/format.h>

#include "bhn/error.hpp"

namespace bhn {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw PreconditionError(fmt::format("degree mismatch: {} vs {}", p.degree(), q.degree()));
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw PreconditionError("permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y])
      throw PreconditionError("image table is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw PreconditionError("permutation degree must be at least 1");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Trusted{});
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Permutation unchecked_permutation(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Trusted{});
}

Permutation identity(std::size_t degree) { return Permutation::identity(degree); }

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = p.images_[q.images_[x]];
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[p.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(out), Permutation::Trusted{});
}

Permutation power(const Permutation& p, std::int64_t k) {
  const std::size_t d = p.degree();
  std::vector<Point> out(d);
  std::vector<bool> done(d, false);
  std::vector<Point> cyc;
  for (std::size_t start = 0; start < d; ++start) {
    if (done[start]) continue;
    cyc.clear();
    for (Point x = static_cast<Point>(start); !done[x]; x = p.images_[x]) {
      done[x] = true;
      cyc.push_back(x);
    }
    const auto len = static_cast<std::int64_t>(cyc.size());
    const std::int64_t shift = floor_mod(k, len);
    for (std::int64_t i = 0; i < len; ++i) out[cyc[i]] = cyc[(i + shift) % len];
  }
  return Permutation(std::move(out), Permutation::Trusted{});
}

std::vector<std::vector<Point>> cycles(const Permutation& p) {
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(p.degree(), false);
  for (Point start = 0; start < p.degree(); ++start) {
    if (done[start] || p(start) == start) continue;
    auto& cyc = result.emplace_back();
    for (Point x = start; !done[x]; x = p(x)) {
      done[x] = true;
      cyc.push_back(x);
    }
  }
  return result;
}

BigInt order(const Permutation& p) {
  BigInt result = 1;
  for (const auto& cyc : cycles(p)) {
    BigInt len = cyc.size();
    result = result / boost::multiprecision::gcd(result, len) * len;
  }
  return result;
}

std::vector<Point> support(const Permutation& p) {
  std::vector<Point> moved;
  for (Point x = 0; x < p.degree(); ++x)
    if (p(x) != x) moved.push_back(x);
  return moved;
}

bool is_even(const Permutation& p) {
  // A k-cycle is a product of k - 1 transpositions.
  std::size_t transpositions = 0;
  for (const auto& cyc : cycles(p)) transpositions += cyc.size() - 1;
  return transpositions % 2 == 0;
}

Permutation cycle_from(std::span<const Point> points, std::size_t degree) {
  Permutation result = Permutation::identity(degree);
  std::vector<Point> images(result.images().begin(), result.images().end());
  std::vector<bool> seen(degree, false);
  for (Point x : points) {
    if (x >= degree) throw PreconditionError(fmt::format("cycle point {} outside degree {}", x, degree));
    if (seen[x]) throw PreconditionError(fmt::format("cycle point {} repeated", x));
    seen[x] = true;
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    images[points[i]] = points[(i + 1) % points.size()];
  return unchecked_permutation(std::move(images));
}

Permutation cycle_from(std::initializer_list<Point> points, std::size_t degree) {
  return cycle_from(std::span<const Point>(points.begin(), points.size()), degree);
}

Generators make_generators(std::uint64_t d, std::uint64_t r1, std::uint64_t r2) {
  if (d < 5 || d % 2 == 0) throw PreconditionError(fmt::format("degree {} must be odd and at least 5", d));
  if (r1 == 0 || r2 == 0 || r1 + r2 > d - 1)
    throw PreconditionError(fmt::format("need r1, r2 >= 1 and r1 + r2 <= d - 1 (d={}, r1={}, r2={})", d, r1, r2));
  std::vector<Point> shift(d);
  for (std::uint64_t x = 0; x < d; ++x) shift[x] = static_cast<Point>((x + 1) % d);
  return {unchecked_permutation(std::move(shift)), shifted_tripod(d, r1, r2, 0)};
}

Permutation shifted_tripod(std::uint64_t d, std::uint64_t r1, std::uint64_t r2, std::int64_t i) {
  const auto dd = static_cast<std::int64_t>(d);
  const std::int64_t base = floor_mod(i, dd);
  const Point pts[3] = {static_cast<Point>(base), static_cast<Point>((base + static_cast<std::int64_t>(r1)) % dd),
                        static_cast<Point>((base + static_cast<std::int64_t>(r1 + r2)) % dd)};
  return cycle_from(pts, d);
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  const auto cyc = cycles(p);
  if (cyc.empty()) return os << "()";
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os;
}

}  // namespace bhn
