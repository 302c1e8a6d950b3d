#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhn/perm.hpp"
#include "bhn/seqgen.hpp"
#include "bhn/words.hpp"
#include "bhn/wreath.hpp"

namespace bhn {

/// The group G = B(d, r, r) <= prod_m Alt(d(m)) generated by alpha = (alpha_m)
/// and beta = (beta_m), with alpha_m = x -> x + 1 mod d(m) and
/// beta_m = (0, r(m), 2 r(m)).
///
/// Coordinates m = 1 .. size() are available; the sequences are fixed at
/// construction and the context is immutable afterwards.
class GroupContext {
 public:
  /// `seqs` must have its radii materialized; every built index becomes a
  /// coordinate.
  explicit GroupContext(SequenceSet seqs);

  /// Builds the sequences of `profile` up to `coordinates` indices.
  static GroupContext from_profile(const GrowthProfile& profile, std::int64_t coordinates);

  const SequenceSet& sequences() const { return seqs_; }
  std::int64_t size() const { return seqs_.size(); }
  std::int64_t degree(std::int64_t m) const;
  std::int64_t radius(std::int64_t m) const;
  const Generators& generators(std::int64_t m) const;

 private:
  std::size_t slot(std::int64_t m) const;

  SequenceSet seqs_;
  std::vector<Generators> generators_;
};

/// Coordinates needed so that cutoff(n) can be evaluated: 2n + 2.
std::int64_t coordinates_for_length(std::int64_t n);

/// w(alpha_m, beta_m) by letter-by-letter composition.
Permutation coordinate_eval(const GroupContext& ctx, const Word& w, std::int64_t m);

/// coordinate_eval(ctx, w, m).is_identity() without building the image table
/// when a mismatch shows up early.
bool coordinate_is_identity(const GroupContext& ctx, const Word& w, std::int64_t m);

/// r >= 2n + 1 and d - 2r >= 2n + 1: the conjugates alpha^i beta alpha^-i
/// for |i| <= n are pairwise disjoint.
bool spread_holds(std::int64_t d, std::int64_t r, std::int64_t n);
bool spread_ok(const GroupContext& ctx, std::int64_t m, std::int64_t n);

/// Largest m <= 2n + 1 at which the spread condition for length n fails
/// (0 if none). Every coordinate above the cutoff satisfies it, so words of
/// length <= n are trivial there exactly when they are trivial in C3 wr Z.
/// Throws SpreadAssertionFailed if the tail condition cannot be certified.
std::int64_t cutoff(const GroupContext& ctx, std::int64_t n);

/// Exact word problem in G for a reduced word.
bool is_trivial(const GroupContext& ctx, const Word& w);
bool equal(const GroupContext& ctx, const Word& u, const Word& v);

/// prod_i (alpha_m^i beta_m alpha_m^-i)^(c_i) * alpha_m^l from lamp data, with
/// the product taken in increasing i. Equal to w(alpha_m, beta_m) whenever
/// u = w_eval(w) and the spread condition holds for |w|.
Permutation reconstruct_from_lamps(const GroupContext& ctx, const WreathElement& u, std::int64_t m);

/// rho_n(w) = (w at coordinates 1 .. 2n).
std::vector<Permutation> rho(const GroupContext& ctx, const Word& w, std::int64_t n);

/// Whether [beta_m, alpha_m^r(n) beta_m alpha_m^-r(n)] is the identity in
/// Alt(d(m)). Expected exactly when m != n.
bool conjugates_commute(const GroupContext& ctx, std::int64_t m, std::int64_t n);

/// Finite data determining a group element among words of length <= n_class:
/// the coordinates 1 .. cutoff(2 n_class) and the image in C3 wr Z.
struct ElementSignature {
  std::vector<Permutation> low_coords;
  WreathElement wreath;

  /// Canonical byte encoding; equal signatures have equal bytes.
  std::string bytes() const;
  friend bool operator==(const ElementSignature&, const ElementSignature&) = default;
};

ElementSignature signature(const GroupContext& ctx, const Word& w, std::int64_t n_class);

/// The reduced word for [b, a^r b a^-r] with r = r(m), after checking that it
/// is nontrivial at coordinate m, trivial at every other coordinate up to
/// the cutoff of its length, and trivial in C3 wr Z.
/// Throws WitnessCheckFailed if any check fails.
Word witness(const GroupContext& ctx, std::int64_t m);

struct BallEntry {
  Word word;  // a shortest representative
  ElementSignature signature;
};

struct BallLimits {
  std::size_t max_elements = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// One entry per element of B_S(n), found breadth first so each
/// representative is a geodesic. Layer k extends the layer k - 1
/// representatives in order by a, A, b, B; the first word reaching an
/// element represents it. Throws BudgetExceeded past the limits.
std::vector<BallEntry> ball(const GroupContext& ctx, std::int64_t n, const BallLimits& limits = {});

}  // namespace bhn
