#include "bhn/growth.hpp"

#include <algorithm>
#include <cmath>

#include "bhn/error.hpp"

namespace bhn {

LogValue log_value(const BigInt& value) {
  LogValue v;
  v.log_magnitude = log_of(value);
  if (boost::multiprecision::msb(value) < 1024) v.exact = value;
  return v;
}

LogValue log_factorial(std::uint64_t n) {
  if (n <= 2000) return log_value(factorial(n));
  return {ln_factorial(static_cast<double>(n)), std::nullopt};
}

double ln_factorial(double n) { return std::lgamma(n + 1.0); }

std::size_t BoundTable::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const BoundRow& r) { return r.lower_log > r.upper_log; }));
}

namespace {

// ln(d!/2); exact when d! fits the LogValue window.
LogValue half_factorial(std::int64_t d) {
  if (d <= 170) return log_value(factorial(static_cast<std::uint64_t>(d)) / 2);
  return {ln_factorial(static_cast<double>(d)) - std::log(2.0), std::nullopt};
}

}  // namespace

std::vector<LowerPoint> rf_lower_points(const GroupContext& ctx, std::int64_t M) {
  std::vector<LowerPoint> points;
  for (std::int64_t m = 1; m <= M; ++m)
    points.push_back({m, 4 + 4 * ctx.radius(m), half_factorial(ctx.degree(m)).log_magnitude});
  return points;
}

LogValue rf_upper(const GroupContext& ctx, std::int64_t n) { return half_factorial(ctx.degree(n)); }

LogValue full_rf_upper(const GroupContext& ctx, std::int64_t n) {
  // prod_{k <= 2n} d(k)!/2; exact while every factor is small.
  LogValue total;
  BigInt exact = 1;
  bool exact_ok = true;
  for (std::int64_t k = 1; k <= 2 * n; ++k) {
    const LogValue factor = half_factorial(ctx.degree(k));
    total.log_magnitude += factor.log_magnitude;
    if (exact_ok && factor.exact) {
      exact *= *factor.exact;
      exact_ok = boost::multiprecision::msb(exact) < 1024;
    } else {
      exact_ok = false;
    }
  }
  if (exact_ok) total.exact = exact;
  return total;
}

double rf_lower_at(const std::vector<LowerPoint>& points, std::int64_t n) {
  double best = 0.0;
  for (const auto& p : points)
    if (p.n <= n) best = std::max(best, p.lower_log);
  return best;
}

StirlingReport stirling_check(const GrowthProfile& profile, std::int64_t N, std::int64_t K) {
  if (!profile.has_log_F()) throw ProfileError("stirling_check needs a profile with log F");
  StirlingReport report;
  report.K = K;
  report.N = N;
  struct Sample {
    std::int64_t n;
    double a;
    std::optional<double> b;
  };
  std::vector<Sample> samples;
  for (std::int64_t n = 1; n <= N; ++n) {
    const double lg = profile.log_F(n);
    if (!(lg > 1.0)) continue;
    const double llg = std::log(lg);
    if (!(llg > 1.0)) continue;  // lllG must be positive for the error term
    const double lllg = std::log(llg);
    const double g = std::ceil(lg / llg);
    report.g_sandwich = report.g_sandwich && lg / llg <= g && g <= 2.0 * lg / llg;

    const double kd = static_cast<double>(K);
    const double err_a = ln_factorial(kd * g) - kd * lg;
    const double ratio_a = std::abs(err_a) / (lg * lllg / llg);

    std::optional<double> ratio_b;
    const double ln_n = std::log(static_cast<double>(n));
    if (ln_n > 0.0) {
      const double nd = static_cast<double>(n);
      const double err_b = ln_factorial(kd * nd * g) - kd * nd * lg;
      ratio_b = std::max(err_b, 0.0) / (nd * lg * ln_n / llg);
    }
    samples.push_back({n, ratio_a, ratio_b});
  }
  if (samples.empty()) return report;
  report.first_n = samples.front().n;
  const std::size_t tail_begin = samples.size() - std::max<std::size_t>(1, samples.size() / 10);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    report.sup_a = std::max(report.sup_a, samples[i].a);
    if (samples[i].b) report.sup_b = std::max(report.sup_b, *samples[i].b);
    if (i >= tail_begin) {
      report.tail_sup_a = std::max(report.tail_sup_a, samples[i].a);
      if (samples[i].b) report.tail_sup_b = std::max(report.tail_sup_b, *samples[i].b);
    }
  }
  const bool finite = std::isfinite(report.sup_a) && std::isfinite(report.sup_b);
  report.passed = finite && report.g_sandwich && report.tail_sup_a <= 2.0 * report.sup_a &&
                  report.tail_sup_b <= 2.0 * report.sup_b;
  return report;
}

bool EnvelopeReport::envelopes_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const EnvelopeRow& r) { return r.lower_inside && r.upper_inside && r.full_inside; });
}

namespace {

// ln F(x) with F(x) = F(ceil x); nullopt outside the profile's domain.
std::optional<double> log_F_at(const GrowthProfile& profile, double x) {
  if (!(x > 0.0)) return std::nullopt;
  const auto n = static_cast<std::int64_t>(std::ceil(x));
  if (auto limit = profile.log_F_limit(); limit && n > *limit) return std::nullopt;
  return profile.log_F(n);
}

}  // namespace

EnvelopeReport envelope_report(const GroupContext& ctx, const GrowthProfile& profile, std::int64_t N,
                               const EnvelopeConstants& k) {
  if (!profile.has_log_F()) throw ProfileError("envelope_report needs a builtin or table profile");
  EnvelopeReport report;
  const auto lower_points = rf_lower_points(ctx, std::min<std::int64_t>(ctx.size(), 2 * N));
  const double c = profile.kind() == GrowthProfile::Kind::builtin ? profile.c() : 1.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    EnvelopeRow row;
    row.n = n;
    row.log_F = profile.log_F(n);
    row.rf_lower = rf_lower_at(lower_points, n);
    row.rf_upper = rf_upper(ctx, n).log_magnitude;
    row.full_upper = full_rf_upper(ctx, n).log_magnitude;

    const double nd = static_cast<double>(n);
    if (row.log_F > 1.0) {
      const double ll = std::log(row.log_F);
      row.bprime_ok = ll >= std::log(nd) * std::log(nd) + std::log(c);
      const double ratio = std::log(ll) / ll;
      if (auto lo = log_F_at(profile, nd / k.c1 - k.c2)) row.env_lower = (1.0 - k.c3 * ratio) * *lo;
      if (auto hi = log_F_at(profile, k.c1 * nd + k.c2)) {
        row.env_upper = (2.0 + k.c3 * ratio) * *hi;
        row.env_full_upper = (2.0 + k.c3 * std::log(nd) / ll) * nd * *hi;
      }
    }
    if (row.env_lower) row.lower_inside = *row.env_lower <= row.rf_lower;
    if (row.env_upper) row.upper_inside = row.rf_upper <= *row.env_upper;
    if (row.env_full_upper) row.full_inside = row.full_upper <= *row.env_full_upper;

    report.table.rows.push_back({n, row.rf_lower, row.rf_upper, BoundKind::rf});
    report.table.rows.push_back({n, row.rf_lower, row.full_upper, BoundKind::full_rf});
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace bhn
