#include "bhn/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "bhn/error.hpp"

namespace bhn {

// ---------------------------------------------------------------------------
// primes

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool witness_composite(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (u64 a : small)
    if (witness_composite(n, a, d, s)) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

// ---------------------------------------------------------------------------
// profiles

GrowthProfile GrowthProfile::builtin(double c, double epsilon, ProfileConstants constants) {
  if (!(c > 0) || !(epsilon > 0)) throw ProfileError("builtin profile needs c > 0 and epsilon > 0");
  GrowthProfile p;
  p.kind_ = Kind::builtin;
  p.c_ = c;
  p.epsilon_ = epsilon;
  p.constants_ = constants;
  return p;
}

GrowthProfile GrowthProfile::default_builtin() { return builtin(1.0, 1.0, {1.0, 1.0, 300.0}); }

GrowthProfile GrowthProfile::table(std::vector<double> log_values, double epsilon, ProfileConstants constants) {
  if (log_values.empty()) throw ProfileError("table profile needs at least one value");
  for (std::size_t i = 1; i < log_values.size(); ++i)
    if (log_values[i] < log_values[i - 1])
      throw ProfileError(fmt::format("table profile decreases at n = {}", i + 1));
  GrowthProfile p;
  p.kind_ = Kind::table;
  p.epsilon_ = epsilon;
  p.constants_ = constants;
  p.log_values_ = std::move(log_values);
  return p;
}

GrowthProfile GrowthProfile::toy_affine(std::int64_t slope, std::int64_t offset) {
  if (slope < 0) throw ProfileError("toy profile slope must be nonnegative");
  GrowthProfile p;
  p.kind_ = Kind::toy;
  p.slope_ = slope;
  p.offset_ = offset;
  p.constants_ = {1.0, 1.0, 0.0};
  return p;
}

GrowthProfile GrowthProfile::toy_table(std::vector<std::int64_t> f_values) {
  if (f_values.empty()) throw ProfileError("toy table needs at least one value");
  GrowthProfile p;
  p.kind_ = Kind::toy;
  p.f_values_ = std::move(f_values);
  p.constants_ = {1.0, 1.0, 0.0};
  return p;
}

double GrowthProfile::log_F(std::int64_t n) const {
  if (n < 1) throw ProfileError(fmt::format("log F is defined for n >= 1, got {}", n));
  switch (kind_) {
    case Kind::builtin: {
      const double x = static_cast<double>(n);
      const double l = std::log(x);
      const double ll = l > 1.0 ? std::log(l) : 0.0;
      return c_ * x * l * l * std::pow(ll, 1.0 + epsilon_);
    }
    case Kind::table:
      if (static_cast<std::size_t>(n) > log_values_.size())
        throw ProfileError(fmt::format("table profile ends at n = {}, asked for {}", log_values_.size(), n));
      return log_values_[static_cast<std::size_t>(n - 1)];
    case Kind::toy:
      break;
  }
  throw ProfileError("toy profiles give f directly and have no log F");
}

std::optional<std::int64_t> GrowthProfile::log_F_limit() const {
  if (kind_ == Kind::table) return static_cast<std::int64_t>(log_values_.size());
  if (kind_ == Kind::toy) return 0;
  return std::nullopt;
}

std::optional<std::int64_t> GrowthProfile::direct_f(std::int64_t n) const {
  if (kind_ != Kind::toy) return std::nullopt;
  if (f_values_.empty()) return slope_ * n + offset_;
  if (n < 1 || static_cast<std::size_t>(n) > f_values_.size())
    throw ProfileError(fmt::format("toy table ends at n = {}, asked for {}", f_values_.size(), n));
  return f_values_[static_cast<std::size_t>(n - 1)];
}

std::int64_t f_of(const GrowthProfile& profile, std::int64_t n) {
  if (auto direct = profile.direct_f(n)) return *direct;
  const auto x = static_cast<std::int64_t>(std::ceil(static_cast<double>(n) + profile.constants().c2));
  const double log_f = profile.log_F(x);
  if (!(log_f > std::numbers::e))
    throw ProfileError(fmt::format("log F({}) = {} is not above e; increase c2", x, log_f));
  return static_cast<std::int64_t>(std::ceil(log_f / std::log(log_f)));
}

std::int64_t divisor_for(std::int64_t f) {
  if (f < 3) throw PreconditionError(fmt::format("f = {} is below 3", f));
  const auto d = static_cast<std::int64_t>(next_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(f, 5))));
  if (d > 2 * f) throw BoundViolation(fmt::format("smallest prime {} >= f = {} exceeds 2f", d, f));
  return d;
}

// ---------------------------------------------------------------------------
// radii

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// x is one of +-y, +-2y modulo m.
bool hits_tripod(std::int64_t x, std::int64_t y, std::int64_t m) {
  const std::int64_t xr = mod(x, m);
  return xr == mod(y, m) || xr == mod(-y, m) || xr == mod(2 * y, m) || xr == mod(-2 * y, m);
}

}  // namespace

bool radii_compatible(std::int64_t k, std::int64_t d_n, std::int64_t r_m, std::int64_t d_m) {
  return !hits_tripod(k, r_m, d_m) && !hits_tripod(r_m, k, d_n);
}

std::int64_t greedy_radius(std::span<const std::int64_t> d_prev, std::span<const std::int64_t> r_prev,
                           std::int64_t n, std::int64_t d_n, std::int64_t q_n) {
  if (d_n < 16 * n) throw DivisorTooSmall(fmt::format("d({}) = {} is below 16n = {}", n, d_n, 16 * n));
  if (n == 1) return 2;
  const std::int64_t window = 17 * n - 1;
  for (std::int64_t k = q_n + 1; k <= q_n + window; ++k) {
    bool ok = true;
    for (std::size_t m = 0; m < r_prev.size() && ok; ++m) ok = radii_compatible(k, d_n, r_prev[m], d_prev[m]);
    if (ok) return k;
  }
  throw NoAdmissibleResidue(
      fmt::format("no admissible radius for n = {} in ({}, {}]", n, q_n, q_n + window));
}

// ---------------------------------------------------------------------------
// sequences

SequenceSet::SequenceSet(GrowthProfile profile, QFunction q) : profile_(std::move(profile)), q_fn_(std::move(q)) {
  if (!q_fn_) q_fn_ = [](std::int64_t n) { return n; };
}

void SequenceSet::extend_divisors_to(std::int64_t n) {
  for (std::int64_t k = divisor_count() + 1; k <= n; ++k) {
    const std::int64_t f = f_of(profile_, k);
    const std::int64_t d = divisor_for(f);
    const std::int64_t q = q_fn_(k);
    Certificate cert;
    cert.d_prime = d >= 5 && d % 2 == 1 && is_prime(static_cast<std::uint64_t>(d));
    cert.d_bertrand = f <= d && d <= 2 * f;
    cert.f_monotone = f_.empty() || f >= f_.back();
    cert.d_monotone = d_.empty() || d >= d_.back();
    cert.q_range = k <= q && 4 * q <= d;
    f_.push_back(f);
    d_.push_back(d);
    q_.push_back(q);
    certs_.push_back(cert);
  }
}

void SequenceSet::extend_to(std::int64_t n) {
  extend_divisors_to(n);
  for (std::int64_t k = size() + 1; k <= n; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    const std::int64_t d = d_[idx];
    const std::int64_t q = q_[idx];
    if (d < 16 * k) throw DivisorTooSmall(fmt::format("d({}) = {} is below 16n = {}", k, d, 16 * k));
    Certificate& cert = certs_[idx];
    if (!cert.divisors_ok())
      throw BoundViolation(fmt::format("hypotheses on d, q fail at n = {} (d = {}, q = {})", k, d, q));
    const std::int64_t r = greedy_radius(std::span(d_).first(idx), r_, k, d, q);
    cert.r_built = true;
    cert.r_range = q < r && r < q + 17 * k;
    cert.r_third = 3 * r < d;
    cert.r_congruence = true;
    for (std::size_t m = 0; m < idx; ++m) cert.r_congruence = cert.r_congruence && radii_compatible(r, d, r_[m], d_[m]);
    if (!cert.r_range || !cert.r_third || !cert.r_congruence)
      throw BoundViolation(fmt::format("radius r({}) = {} violates its bounds (d = {}, q = {})", k, r, d, q));
    r_.push_back(r);
  }
}

std::size_t SequenceSet::slot(std::int64_t n, std::size_t available, const char* what) const {
  if (n < 1 || static_cast<std::size_t>(n) > available)
    throw NotMaterialized(fmt::format("{}({}) requested but only {} indices are built", what, n, available));
  return static_cast<std::size_t>(n - 1);
}

std::int64_t SequenceSet::f(std::int64_t n) const { return f_[slot(n, f_.size(), "f")]; }
std::int64_t SequenceSet::d(std::int64_t n) const { return d_[slot(n, d_.size(), "d")]; }
std::int64_t SequenceSet::q(std::int64_t n) const { return q_[slot(n, q_.size(), "q")]; }
std::int64_t SequenceSet::r(std::int64_t n) const { return r_[slot(n, r_.size(), "r")]; }
const Certificate& SequenceSet::certificate(std::int64_t n) const { return certs_[slot(n, certs_.size(), "certificate")]; }

std::int64_t d_of(const SequenceSet& seqs, std::int64_t n) { return seqs.d(n); }
std::int64_t r_of(const SequenceSet& seqs, std::int64_t n) { return seqs.r(n); }

// ---------------------------------------------------------------------------
// hypotheses

bool HypothesisReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const HypothesisCheck& c) { return c.passed; });
}

const HypothesisCheck* HypothesisReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// n log(n) max(loglog n, 0)^(1 + eps / 2)
double growth_shape(std::int64_t n, double epsilon) {
  const double x = static_cast<double>(n);
  const double l = std::log(x);
  const double ll = l > 1.0 ? std::log(l) : 0.0;
  return x * l * std::pow(ll, 1.0 + epsilon / 2.0);
}

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name, std::string detail = {}) { check_.name = std::move(name); check_.detail = std::move(detail); }
  void record(std::int64_t n, bool ok) {
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.first_failure = n;
    }
  }
  HypothesisCheck done() && { return std::move(check_); }

 private:
  HypothesisCheck check_;
};

}  // namespace

HypothesisReport validate_hypotheses(const SequenceSet& seqs, std::int64_t N) {
  HypothesisReport report;
  report.n_checked = N;
  const GrowthProfile& profile = seqs.profile();
  const double eps = profile.epsilon();
  const double c0 = profile.constants().c0;
  const double c1 = profile.constants().c1;

  CheckBuilder odd_prime("odd_prime");
  CheckBuilder bertrand("bertrand");
  CheckBuilder monotone("monotone");
  CheckBuilder growth("divisor_growth", fmt::format("d(n) >= C0 n log n (loglog n)^(1+eps/2) + C0 with C0 = {}", c0));
  CheckBuilder q_range("q_range");
  CheckBuilder sixteen("divisor_16n");
  double largest_c = std::numeric_limits<double>::infinity();
  double series = 0.0;
  for (std::int64_t n = 1; n <= N; ++n) {
    const Certificate& cert = seqs.certificate(n);
    const std::int64_t d = seqs.d(n);
    odd_prime.record(n, cert.d_prime);
    bertrand.record(n, cert.d_bertrand);
    monotone.record(n, cert.d_monotone && cert.f_monotone);
    const double shape = growth_shape(n, eps);
    growth.record(n, static_cast<double>(d) >= c0 * shape + c0);
    largest_c = std::min(largest_c, static_cast<double>(d) / (shape + 1.0));
    q_range.record(n, cert.q_range);
    sixteen.record(n, d >= 16 * n);
    series += 1.0 / static_cast<double>(d);
  }
  report.series_sum = series;
  report.largest_growth_constant = largest_c;
  report.checks.push_back(std::move(odd_prime).done());
  report.checks.push_back(std::move(bertrand).done());
  report.checks.push_back(std::move(monotone).done());
  auto growth_check = std::move(growth).done();
  growth_check.detail += fmt::format("; holds on [1, N] for C0 up to {:.6g}", largest_c);
  report.checks.push_back(std::move(growth_check));
  report.checks.push_back(std::move(q_range).done());
  report.checks.push_back(std::move(sixteen).done());

  HypothesisCheck series_check{"series_bound", series < 1.0 / 16.0, 0,
                               fmt::format("sum 1/d(m) over m <= {} is {:.6g}, limit 1/16", N, series)};
  if (!series_check.passed) {
    double partial = 0.0;
    for (std::int64_t n = 1; n <= N; ++n) {
      partial += 1.0 / static_cast<double>(seqs.d(n));
      if (partial >= 1.0 / 16.0) {
        series_check.first_failure = n;
        break;
      }
    }
  }
  report.checks.push_back(std::move(series_check));

  if (profile.kind() != GrowthProfile::Kind::toy) {
    CheckBuilder f_lower("f_lower_bound", fmt::format("f(n) >= C1 n log n (loglog n)^(1+eps/2) + C1 with C1 = {}", c1));
    for (std::int64_t n = 1; n <= N; ++n)
      f_lower.record(n, static_cast<double>(seqs.f(n)) >= c1 * growth_shape(n, eps) + c1);
    report.checks.push_back(std::move(f_lower).done());
  }

  const std::int64_t built = std::min(N, seqs.size());
  CheckBuilder r_base("r_base", "r(1) = 2");
  CheckBuilder r_range("r_range", "q(n) < r(n) < q(n) + 17n");
  CheckBuilder r_third("r_third", "r(n) < d(n)/3");
  CheckBuilder congruence("r_congruence", "r(l) not in +-r(m), +-2r(m) mod d(m) for l != m");
  if (built >= 1) r_base.record(1, seqs.r(1) == 2);
  for (std::int64_t n = 1; n <= built; ++n) {
    const std::int64_t r = seqs.r(n), q = seqs.q(n), d = seqs.d(n);
    r_range.record(n, q < r && r < q + 17 * n);
    r_third.record(n, 3 * r < d);
    for (std::int64_t m = 1; m < n; ++m) congruence.record(n, radii_compatible(r, d, seqs.r(m), seqs.d(m)));
  }
  for (CheckBuilder* b : {&r_base, &r_range, &r_third, &congruence}) {
    auto c = std::move(*b).done();
    c.detail += fmt::format(" (radii built for {} of {} indices)", built, N);
    if (built < N && c.passed) c.passed = built == N;
    if (!c.passed && c.first_failure == 0) c.first_failure = built + 1;
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace bhn
