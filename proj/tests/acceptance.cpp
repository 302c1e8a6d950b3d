// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "bhn/cli.hpp"
#include "bhn/growth.hpp"
#include "bhn/neumann.hpp"
#include "bhn/schreier.hpp"
#include "bhn/seqgen.hpp"
#include "oracles.hpp"

using namespace bhn;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool ok = o.passed && in_time;
  if (!ok) ++failures;
  std::string limit = limit_s > 0 ? fmt::format(" limit {:.0f}s", limit_s) : "";
  std::cout << fmt::format("[{}] {:>2} {}: {} ({:.2f}s{}{})", ok ? "PASS" : "FAIL", id, name, o.detail, secs, limit,
                           in_time ? "" : ", over time")
            << std::endl;
}

GrowthProfile toy() { return GrowthProfile::default_toy(); }

bool hits(std::int64_t x, std::int64_t y, std::int64_t mod) {
  for (std::int64_t c : {y, -y, 2 * y, -2 * y})
    if (((x - c) % mod + mod) % mod == 0) return true;
  return false;
}

Outcome generation() {
  SequenceSet s(toy());
  s.extend_to(10);
  int ok = 0, total = 0;
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto d = static_cast<std::uint64_t>(s.d(n)), r = static_cast<std::uint64_t>(s.r(n));
    const Generators g = make_generators(d, r, r);
    const Permutation gens[] = {g.alpha, g.beta};
    ++total;
    ok += verify_alt_generation(d, r, r) && group_order(build_chain(gens)) == factorial(d) / 2;
  }
  for (auto [d, r1, r2] : {std::tuple{5u, 2u, 2u}, {7u, 2u, 3u}, {11u, 3u, 3u}, {13u, 4u, 4u}}) {
    ++total;
    ok += verify_alt_generation(d, r1, r2);
  }
  const Generators g11 = make_generators(11, 3, 3);
  const Permutation gens11[] = {g11.alpha, g11.beta};
  const bool order11 = group_order(build_chain(gens11)) == BigInt(19958400);
  return {ok == total && order11,
          fmt::format("{}/{} generating pairs give Alt(d), max degree {}, 11!/2 = 19958400 {}", ok, total, s.d(10),
                      order11 ? "exact" : "MISMATCH")};
}

Outcome radii() {
  const std::int64_t N = 200;
  SequenceSet s(toy());
  s.extend_to(N);
  std::int64_t residue_checks = 0, bad = 0, range_bad = 0, third_bad = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    range_bad += !(s.q(n) < s.r(n) && s.r(n) < s.q(n) + 17 * n);
    third_bad += !(3 * s.r(n) < s.d(n));
    for (std::int64_t m = 1; m <= N; ++m) {
      if (m == n) continue;
      residue_checks += 4;
      bad += hits(s.r(n), s.r(m), s.d(m));
    }
  }
  const bool ok = bad == 0 && range_bad == 0 && third_bad == 0 && s.r(1) == 2;
  return {ok, fmt::format("{} residue checks, {} congruence failures, {} range failures, {} third failures, r(1) = {}",
                          residue_checks, bad, range_bad, third_bad, s.r(1))};
}

Outcome locality() {
  const GroupContext ctx = GroupContext::from_profile(toy(), coordinates_for_length(64));
  std::int64_t words = 0, coordinate_checks = 0, triv_bad = 0, recon_bad = 0;
  auto check = [&](const Word& w) {
    ++words;
    const WreathElement u = w_eval(w);
    const auto n = static_cast<std::int64_t>(w.size());
    for (std::int64_t m = 1; m <= ctx.size(); ++m) {
      if (!spread_ok(ctx, m, n)) continue;
      ++coordinate_checks;
      const Permutation p = coordinate_eval(ctx, w, m);
      triv_bad += p.is_identity() != u.is_identity();
      recon_bad += reconstruct_from_lamps(ctx, u, m) != p;
    }
  };
  ReducedWordStream stream(8);
  std::int64_t exhaustive = 0;
  while (auto w = stream.next()) {
    check(*w);
    ++exhaustive;
  }
  for (std::uint64_t i = 0; i < 10000; ++i) check(random_reduced(1 + i % 64, 0xACCE55ULL + i));
  return {exhaustive == 13121 && triv_bad == 0 && recon_bad == 0,
          fmt::format("{} exhaustive + {} random words over {} coordinates, {} coordinate checks, {} triviality and {} "
                      "reconstruction mismatches",
                      exhaustive, words - exhaustive, ctx.size(), coordinate_checks, triv_bad, recon_bad)};
}

Outcome commuting() {
  const GroupContext ctx = GroupContext::from_profile(toy(), 50);
  int ok = 0;
  for (std::int64_t m = 1; m <= 50; ++m)
    for (std::int64_t n = 1; n <= 50; ++n) ok += conjugates_commute(ctx, m, n) == (m != n);
  return {ok == 2500, fmt::format("{}/2500 pairs commute exactly when m != n", ok)};
}

Outcome witnesses() {
  SequenceSet s(toy());
  s.extend_to(25);
  s.extend_to(coordinates_for_length(4 + 4 * s.r(25)));
  const GroupContext ctx(std::move(s));
  int ok = 0;
  for (std::int64_t m = 1; m <= 25; ++m) {
    const Word w = witness(ctx, m);
    bool good = static_cast<std::int64_t>(w.size()) == 4 + 4 * ctx.radius(m) && w_eval(w).is_identity();
    for (std::int64_t k = 1; k <= 100 && good; ++k) good = coordinate_is_identity(ctx, w, k) == (k != m);
    ok += good;
  }
  return {ok == 25, fmt::format("{}/25 witnesses of length 4 + 4r(m), supported only at m among coordinates <= 100", ok)};
}

Outcome injectivity() {
  const GroupContext ctx = GroupContext::from_profile(toy(), coordinates_for_length(8));
  bool ok = true;
  std::string sizes;
  for (std::int64_t n = 1; n <= 4; ++n) {
    const auto entries = ball(ctx, n);
    std::set<std::vector<std::vector<Point>>> images;
    for (const auto& e : entries) {
      std::vector<std::vector<Point>> key;
      for (const auto& p : rho(ctx, e.word, n)) key.emplace_back(p.images().begin(), p.images().end());
      images.insert(std::move(key));
    }
    const std::size_t pairwise = oracle::pairwise_ball_size(ctx, static_cast<std::size_t>(n));
    ok = ok && images.size() == entries.size() && pairwise == entries.size();
    if (n == 1) ok = ok && entries.size() == 5;
    sizes += fmt::format("{}|B({})| = {} (oracle {}, rho images {})", n > 1 ? ", " : "", n, entries.size(), pairwise,
                         images.size());
  }
  return {ok, sizes};
}

std::int64_t false_cells(const std::string& jsonl, const std::set<std::string>& columns, std::int64_t& rows) {
  std::int64_t bad = 0;
  std::istringstream in(jsonl);
  for (std::string line; std::getline(in, line);) {
    const auto row = nlohmann::json::parse(line);
    if (row["section"] != "bounds") continue;
    ++rows;
    for (const auto& c : columns)
      if (row.contains(c) && row[c] == false) ++bad;
  }
  return bad;
}

Outcome bounds() {
  std::int64_t rows = 0, violations = 0;
  for (const char* name : {"toy", "builtin"}) {
    cli::RunConfig c;
    c.command = cli::Command::growth;
    c.profile = cli::ProfileSpec::preset(name);
    c.n = 40;
    c.format = cli::Format::json;
    std::ostringstream out;
    cli::run(c, out);
    violations += false_cells(out.str(), {"lower_le_upper", "full_ge_upper"}, rows);
  }
  const GrowthProfile b = GrowthProfile::default_builtin();
  const EnvelopeReport rep = envelope_report(GroupContext::from_profile(b, 80), b, 40, {72.0, 302.0, 4.0});
  violations += static_cast<std::int64_t>(rep.table.violations());
  rows += static_cast<std::int64_t>(rep.table.rows.size());

  SequenceSet s(toy());
  s.extend_divisors_to(20);
  int exact_ok = 0;
  for (std::int64_t n = 1; n <= 20; ++n) {
    const auto f = static_cast<std::uint64_t>(s.f(n));
    const BigInt mid = factorial(static_cast<std::uint64_t>(s.d(n))) / 2;
    exact_ok += factorial(f) / 2 <= mid && mid <= factorial(2 * f);
  }
  return {violations == 0 && exact_ok == 20,
          fmt::format("{} bound rows with {} violations; exact f!/2 <= d!/2 <= (2f)! for {}/20 indices", rows,
                      violations, exact_ok)};
}

Outcome stirling() {
  std::int64_t sandwich_bad = 0;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const double x = static_cast<double>(n);
    const double lf = log_factorial(n).log_magnitude;
    const double slack = 1e-12 * x * std::log(x + 1.0);
    sandwich_bad += lf < x * std::log(x) - x - slack || lf > x * std::log(x) + slack;
  }
  bool constants_ok = true;
  std::string detail;
  for (std::int64_t K = 1; K <= 3; ++K) {
    const StirlingReport r = stirling_check(GrowthProfile::default_builtin(), 1000, K);
    constants_ok = constants_ok && r.passed;
    detail += fmt::format("; K={}: sup {:.4g}/{:.4g}, tail {:.4g}/{:.4g}", K, r.sup_a, r.sup_b, r.tail_sup_a,
                          r.tail_sup_b);
  }
  return {sandwich_bad == 0 && constants_ok,
          fmt::format("sandwich fails at {} of 100000 n{}", sandwich_bad, detail)};
}

Outcome bertrand() {
  const std::uint64_t X = 1000000;
  const auto prime = oracle::sieve(2 * X);
  std::uint64_t bad = 0, next = 0;
  for (std::uint64_t x = 2 * X; x >= 3; --x) {
    if (prime[x]) next = x;
    if (x > X) continue;
    const std::uint64_t lib = next_prime(x);
    bad += !(next != 0 && next >= x && next < 2 * x && lib == next);
  }
  return {bad == 0, fmt::format("{} of {} values of x in [3, 10^6] fail", bad, X - 2)};
}

Outcome determinism() {
  cli::RunConfig c = cli::RunConfig::load(BHN_PROFILES_DIR "/toy.json");
  c.command = cli::Command::verify;
  std::ostringstream a, b;
  const int ca = cli::run(c, a), cb = cli::run(c, b);
  c.format = cli::Format::json;
  std::ostringstream ja, jb;
  cli::run(c, ja);
  cli::run(c, jb);
  const bool same = a.str() == b.str() && ja.str() == jb.str();
  return {same && ca == 0 && cb == 0,
          fmt::format("verify reports {} ({} bytes tsv, {} bytes json), exit codes {} {}",
                      same ? "byte-identical" : "DIFFER", a.str().size(), ja.str().size(), ca, cb)};
}

}  // namespace

int main() {
  criterion(1, "generation", 10, generation);
  criterion(2, "greedy radii", 5, radii);
  criterion(3, "locality", 60, locality);
  criterion(4, "commuting criterion", 5, commuting);
  criterion(5, "witness elements", 10, witnesses);
  criterion(6, "injectivity of rho", 120, injectivity);
  criterion(7, "bound consistency", 0, bounds);
  criterion(8, "factorial bounds", 0, stirling);
  criterion(9, "bertrand", 10, bertrand);
  criterion(10, "determinism", 0, determinism);
  std::cout << fmt::format("{} of 10 criteria passed", 10 - failures) << std::endl;
  return failures == 0 ? 0 : 1;
}
