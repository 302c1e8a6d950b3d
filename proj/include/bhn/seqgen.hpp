#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bhn {

/// Exact primality for all 64-bit inputs (deterministic Miller-Rabin).
bool is_prime(std::uint64_t n);

/// Smallest prime p >= n.
std::uint64_t next_prime(std::uint64_t n);

/// Constants of the construction. The existence proofs fix none of them
/// numerically, so they are inputs.
struct ProfileConstants {
  double c0 = 1.0;  // lower constant in the divisor growth hypothesis
  double c1 = 1.0;  // target constant for the lower bound on f
  double c2 = 0.0;  // index shift: f(n) is read off log F(n + c2)
};

/// The prescribed growth function F, given in natural-log form.
///
/// Three kinds:
///   builtin   log F(n) = c n log(n)^2 max(loglog n, 0)^(1 + eps)
///   table     log F(1), log F(2), ... listed explicitly
///   toy       f(n) given directly, either affine or as a table; log F is
///             not available and the growth hypothesis is bypassed
class GrowthProfile {
 public:
  enum class Kind { builtin, table, toy };

  static GrowthProfile builtin(double c, double epsilon, ProfileConstants constants);
  static GrowthProfile table(std::vector<double> log_values, double epsilon, ProfileConstants constants);
  static GrowthProfile toy_affine(std::int64_t slope, std::int64_t offset);
  static GrowthProfile toy_table(std::vector<std::int64_t> f_values);

  /// f(n) = 16 n + 4, the default desk-scale profile.
  static GrowthProfile default_toy() { return toy_affine(16, 4); }
  /// c = 1, eps = 1, c2 = 300.
  static GrowthProfile default_builtin();

  Kind kind() const { return kind_; }
  double c() const { return c_; }
  double epsilon() const { return epsilon_; }
  const ProfileConstants& constants() const { return constants_; }
  std::int64_t toy_slope() const { return slope_; }
  std::int64_t toy_offset() const { return offset_; }
  std::span<const double> log_table() const { return log_values_; }
  std::span<const std::int64_t> f_table() const { return f_values_; }

  bool has_log_F() const { return kind_ != Kind::toy; }
  /// Natural log of F(n); throws ProfileError for toy profiles or indices
  /// outside a table.
  double log_F(std::int64_t n) const;
  /// Largest n for which log_F is defined (unbounded for builtin).
  std::optional<std::int64_t> log_F_limit() const;

  /// Direct f values of a toy profile.
  std::optional<std::int64_t> direct_f(std::int64_t n) const;

  friend bool operator==(const GrowthProfile&, const GrowthProfile&) = default;

 private:
  GrowthProfile() = default;

  Kind kind_ = Kind::toy;
  double c_ = 1.0;
  double epsilon_ = 1.0;
  ProfileConstants constants_;
  std::vector<double> log_values_;
  std::int64_t slope_ = 0;
  std::int64_t offset_ = 0;
  std::vector<std::int64_t> f_values_;
};

/// f(n) = ceil(log F(n + c2) / loglog F(n + c2)), with a non-integer
/// argument rounded up. Toy profiles pass f through. Throws ProfileError
/// when log F(n + c2) <= e.
std::int64_t f_of(const GrowthProfile& profile, std::int64_t n);

/// Smallest prime >= max(f, 5). Throws BoundViolation if it exceeds 2f;
/// requires f >= 3.
std::int64_t divisor_for(std::int64_t f);

/// Side conditions verified while materializing index n.
struct Certificate {
  bool d_prime = false;        // d(n) odd prime >= 5
  bool d_bertrand = false;     // f(n) <= d(n) <= 2 f(n)
  bool d_monotone = false;     // d(n) >= d(n - 1)
  bool f_monotone = false;     // f(n) >= f(n - 1)
  bool q_range = false;        // n <= q(n) <= d(n) / 4
  bool r_built = false;
  bool r_range = false;        // q(n) < r(n) < q(n) + 17 n
  bool r_third = false;        // 3 r(n) < d(n)
  bool r_congruence = false;   // pairwise condition against all m < n

  bool divisors_ok() const { return d_prime && d_bertrand && d_monotone && f_monotone && q_range; }
  bool all() const { return divisors_ok() && r_built && r_range && r_third && r_congruence; }
};

/// True when k avoids +-r(m), +-2r(m) mod d(m) and r(m) avoids
/// +-k, +-2k mod d_n, i.e. the pair of radii k (at modulus d_n) and r(m)
/// (at modulus d(m)) is admissible in both directions.
bool radii_compatible(std::int64_t k, std::int64_t d_n, std::int64_t r_m, std::int64_t d_m);

/// Greedy radius for index n >= 2 given the earlier moduli and radii
/// (index 0 of the spans is index 1 of the sequence): the smallest k in
/// (q_n, q_n + 17n - 1] compatible with every earlier pair.
/// Throws DivisorTooSmall if d_n < 16 n and NoAdmissibleResidue if the
/// window is exhausted.
std::int64_t greedy_radius(std::span<const std::int64_t> d_prev, std::span<const std::int64_t> r_prev,
                           std::int64_t n, std::int64_t d_n, std::int64_t q_n);

/// Memoized sequences f, d, q, r for indices 1, 2, ...
///
/// Growth is exclusive (non-const extend calls); reads are const and may be
/// shared. Indices beyond what has been materialized throw NotMaterialized.
class SequenceSet {
 public:
  using QFunction = std::function<std::int64_t(std::int64_t)>;

  explicit SequenceSet(GrowthProfile profile, QFunction q = {});

  /// Materializes f, d, q for indices <= n; r is left alone.
  void extend_divisors_to(std::int64_t n);
  /// Materializes everything, including the greedy radii, for indices <= n.
  void extend_to(std::int64_t n);

  std::int64_t divisor_count() const { return static_cast<std::int64_t>(d_.size()); }
  std::int64_t size() const { return static_cast<std::int64_t>(r_.size()); }

  std::int64_t f(std::int64_t n) const;
  std::int64_t d(std::int64_t n) const;
  std::int64_t q(std::int64_t n) const;
  std::int64_t r(std::int64_t n) const;
  const Certificate& certificate(std::int64_t n) const;
  const GrowthProfile& profile() const { return profile_; }

 private:
  std::size_t slot(std::int64_t n, std::size_t available, const char* what) const;

  GrowthProfile profile_;
  QFunction q_fn_;
  std::vector<std::int64_t> f_, d_, q_, r_;
  std::vector<Certificate> certs_;
};

std::int64_t d_of(const SequenceSet& seqs, std::int64_t n);
std::int64_t r_of(const SequenceSet& seqs, std::int64_t n);

struct HypothesisCheck {
  std::string name;
  bool passed = true;
  std::int64_t first_failure = 0;  // 0 when passed
  std::string detail;
};

struct HypothesisReport {
  std::int64_t n_checked = 0;
  std::vector<HypothesisCheck> checks;
  double series_sum = 0.0;         // sum_{m <= N} 1 / d(m)
  double largest_growth_constant = 0.0;  // largest C for which the divisor growth hypothesis holds on [1, N]

  bool all_passed() const;
  const HypothesisCheck* find(const std::string& name) const;
};

/// Checks the divisor and radius hypotheses on indices <= N. Divisors must
/// be materialized to N; radius conditions cover the materialized prefix.
HypothesisReport validate_hypotheses(const SequenceSet& seqs, std::int64_t N);

}  // namespace bhn
