#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bhn/bigint.hpp"
#include "bhn/perm.hpp"

namespace bhn {

/// Base and strong generating set for a permutation group. A fixed-seed
/// random sifting phase is followed by the incremental Schreier-Sims
/// algorithm, which alone decides completeness; results never depend on
/// the random phase.
///
/// Level k holds the k-th base point, the strong generators fixing all
/// earlier base points, and a transversal: for each point b in the basic
/// orbit, a group element u_b with u_b(base[k]) = b.
class StabilizerChain {
 public:
  /// Generators must be nonempty and share a degree.
  static StabilizerChain build(std::span<const Permutation> generators);

  std::size_t degree() const { return degree_; }
  std::span<const Point> base() const { return base_; }
  std::span<const Permutation> strong_generators() const { return strong_; }
  std::size_t levels() const { return levels_.size(); }
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

  /// Product of the basic orbit sizes.
  BigInt order() const;

  /// Sifts p through the chain; degree mismatch throws.
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> generators;     // indices into strong_
    std::vector<Point> orbit;                // in discovery order
    std::vector<std::int32_t> slot;          // point -> index into orbit, or -1
    std::vector<Permutation> reps;           // parallel to orbit
    std::vector<Permutation> rep_inverses;   // parallel to orbit
    std::vector<std::vector<char>> tested;   // [orbit index][generator index]
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // == levels() when the residue passed every level
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  void add_level(Point base_point);
  void extend_orbit(Level& level);
  SiftResult sift(Permutation h, std::size_t from) const;
  bool reached_order_bound() const;
  /// Adds p to levels from..to, opening a new level when to == levels().
  void add_strong(Permutation p, std::size_t from, std::size_t to);
  void random_phase();
  void run();

  std::size_t degree_;
  std::vector<Point> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  BigInt order_bound_;
};

StabilizerChain build_chain(std::span<const Permutation> generators);
BigInt group_order(const StabilizerChain& chain);
bool contains(const StabilizerChain& chain, const Permutation& p);

/// Checks <alpha, beta> = Alt(d) for the generators of make_generators by
/// comparing the exact group order against d!/2. Requires d prime, d >= 5.
bool verify_alt_generation(std::uint64_t d, std::uint64_t r1, std::uint64_t r2);

}  // namespace bhn
