#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bhn/bigint.hpp"
#include "bhn/neumann.hpp"
#include "bhn/seqgen.hpp"

namespace bhn {

/// A positive quantity held by its natural logarithm, with the exact integer
/// attached when it is at most 2^1024.
struct LogValue {
  double log_magnitude = 0.0;
  std::optional<BigInt> exact;
};

/// Attaches `value` as exact when it fits under 2^1024.
LogValue log_value(const BigInt& value);

/// ln(n!): from the exact product for n <= 2000, from lgamma beyond.
LogValue log_factorial(std::uint64_t n);

/// ln(n!) from lgamma alone; the fast path used for tables.
double ln_factorial(double n);

enum class BoundKind { rf, full_rf };

struct BoundRow {
  std::int64_t n = 0;
  double lower_log = 0.0;
  double upper_log = 0.0;
  BoundKind kind = BoundKind::rf;
};

struct BoundTable {
  std::vector<BoundRow> rows;
  /// Rows with lower_log > upper_log.
  std::size_t violations() const;
};

/// The lower bound F_G(4 + 4r(m)) >= d(m)!/2 realized by witness(m).
struct LowerPoint {
  std::int64_t m = 0;
  std::int64_t n = 0;  // 4 + 4 r(m)
  double lower_log = 0.0;
};

/// One point per coordinate m <= M.
std::vector<LowerPoint> rf_lower_points(const GroupContext& ctx, std::int64_t M);

/// ln(d(n)!/2), an upper bound for ln F_G(n).
LogValue rf_upper(const GroupContext& ctx, std::int64_t n);

/// sum_{k <= 2n} ln d(k)! - 2n ln 2, an upper bound for ln R_G(n).
/// Needs 2n coordinates.
LogValue full_rf_upper(const GroupContext& ctx, std::int64_t n);

/// Largest lower point with 4 + 4r(m) <= n, or 0 when none applies.
double rf_lower_at(const std::vector<LowerPoint>& points, std::int64_t n);

struct StirlingReport {
  std::int64_t K = 0;
  std::int64_t N = 0;
  std::int64_t first_n = 0;            // first n where every term is defined
  double sup_a = 0.0;                  // sup |err_a| / term_a
  double sup_b = 0.0;                  // sup max(err_b, 0) / term_b
  double tail_sup_a = 0.0;             // same sups over the last decile of n
  double tail_sup_b = 0.0;
  bool g_sandwich = true;              // log G / loglog G <= g <= 2 log G / loglog G
  bool passed = false;                 // finite sups and tail <= 2 x overall
};

/// Empirical constants of ln((K g(n))!) = K ln G(n) + O(ln G lllG / llG) and
/// ln((K n g(n))!) <= K n ln G(n) + O(n ln G ln n / llG), where
/// g(n) = ceil(ln G(n) / lnln G(n)) and G is the profile's F. Indices where
/// lll G(n) <= 0 or ln n = 0 are skipped.
StirlingReport stirling_check(const GrowthProfile& profile, std::int64_t N, std::int64_t K);

/// Candidate constants for the growth envelopes; the existence proofs fix
/// none of them.
struct EnvelopeConstants {
  double c1 = 72.0;
  double c2 = 2.0;
  double c3 = 4.0;
  friend bool operator==(const EnvelopeConstants&, const EnvelopeConstants&) = default;
};

struct EnvelopeRow {
  std::int64_t n = 0;
  double log_F = 0.0;
  double rf_lower = 0.0;
  double rf_upper = 0.0;
  double full_upper = 0.0;
  std::optional<double> env_lower;       // ln of F(n/c1 - c2)^(1 - c3 lllF/llF)
  std::optional<double> env_upper;       // ln of F(c1 n + c2)^(2 + c3 lllF/llF)
  std::optional<double> env_full_upper;  // ln of F(c1 n + c2)^((2 + c3 ln n/llF) n)
  bool lower_inside = true;              // env_lower <= rf_lower
  bool upper_inside = true;              // rf_upper <= env_upper
  bool full_inside = true;               // full_upper <= env_full_upper
  bool bprime_ok = false;                // lnln F(n) >= ln(n)^2 + ln(c); informational
};

struct EnvelopeReport {
  BoundTable table;
  std::vector<EnvelopeRow> rows;
  bool envelopes_hold() const;
};

/// Per n <= N: proven bounds on F_G and R_G and the growth envelopes for
/// the given candidate constants. Needs 2N coordinates and log F up to
/// c1 N + c2.
EnvelopeReport envelope_report(const GroupContext& ctx, const GrowthProfile& profile, std::int64_t N,
                               const EnvelopeConstants& constants);

}  // namespace bhn
