#include "bhn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "bhn/error.hpp"
#include "bhn/neumann.hpp"
#include "bhn/schreier.hpp"
#include "bhn/words.hpp"
#include "bhn/wreath.hpp"

namespace bhn::cli {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// enums

std::string to_string(Command c) {
  switch (c) {
    case Command::build: return "build";
    case Command::verify: return "verify";
    case Command::growth: return "growth";
    case Command::oracle: return "oracle";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::tsv ? "tsv" : "json"; }

Command parse_command(const std::string& s) {
  for (Command c : {Command::build, Command::verify, Command::growth, Command::oracle})
    if (to_string(c) == s) return c;
  throw ConfigError(fmt::format("unknown command '{}'", s));
}

Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  throw ConfigError(fmt::format("unknown format '{}' (expected tsv or json)", s));
}

// ---------------------------------------------------------------------------
// config

namespace {

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config key '{}': {}", key, e.what()));
  }
}

template <typename T>
void read_if(const json& j, const char* key, T& field) {
  if (j.contains(key)) field = get_as<T>(j, key);
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where) {
  if (!j.is_object()) throw ConfigError(fmt::format("{} must be a JSON object", where));
  for (const auto& [key, value] : j.items()) {
    const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) { return key == k; });
    if (!ok) throw ConfigError(fmt::format("unknown key '{}' in {}", key, where));
  }
}

}  // namespace

ProfileSpec ProfileSpec::preset(const std::string& name) {
  ProfileSpec p;
  if (name == "toy") return p;
  if (name == "builtin") {
    p.kind = "builtin";
    p.C2 = 300.0;
    return p;
  }
  throw ConfigError(fmt::format("unknown profile preset '{}' (expected toy or builtin)", name));
}

GrowthProfile ProfileSpec::to_profile() const {
  try {
    const ProfileConstants consts{C0, C1, C2};
    if (kind == "toy") return f_table.empty() ? GrowthProfile::toy_affine(f_slope, f_offset) : GrowthProfile::toy_table(f_table);
    if (kind == "builtin") return GrowthProfile::builtin(c, epsilon, consts);
    if (kind == "table") return GrowthProfile::table(log_F, epsilon, consts);
  } catch (const ProfileError& e) {
    throw ConfigError(fmt::format("invalid profile: {}", e.what()));
  } catch (const PreconditionError& e) {
    throw ConfigError(fmt::format("invalid profile: {}", e.what()));
  }
  throw ConfigError(fmt::format("unknown profile kind '{}'", kind));
}

json ProfileSpec::to_json() const {
  json j;
  j["kind"] = kind;
  if (kind == "toy") {
    if (f_table.empty()) {
      j["f_slope"] = f_slope;
      j["f_offset"] = f_offset;
    } else {
      j["f_table"] = f_table;
    }
    return j;
  }
  if (kind == "builtin") j["c"] = c;
  if (kind == "table") j["log_F"] = log_F;
  j["epsilon"] = epsilon;
  j["C0"] = C0;
  j["C1"] = C1;
  j["C2"] = C2;
  return j;
}

ProfileSpec ProfileSpec::from_json(const json& j) {
  if (j.is_string()) return preset(j.get<std::string>());
  reject_unknown(j, {"kind", "c", "epsilon", "C0", "C1", "C2", "f_slope", "f_offset", "f_table", "log_F"}, "profile");
  ProfileSpec p;
  p.kind = get_as<std::string>(j, "kind");
  if (p.kind == "builtin") p = preset("builtin");
  read_if(j, "c", p.c);
  read_if(j, "epsilon", p.epsilon);
  read_if(j, "C0", p.C0);
  read_if(j, "C1", p.C1);
  read_if(j, "C2", p.C2);
  read_if(j, "f_slope", p.f_slope);
  read_if(j, "f_offset", p.f_offset);
  read_if(j, "f_table", p.f_table);
  read_if(j, "log_F", p.log_F);
  p.to_profile();  // validates
  return p;
}

std::int64_t RunConfig::resolved_n() const {
  if (n) return *n;
  switch (command) {
    case Command::build: return 20;
    case Command::verify: return 25;
    case Command::growth: return 20;
    case Command::oracle: return 4;
  }
  return 1;
}

EnvelopeConstants RunConfig::resolved_envelope() const {
  if (envelope) return *envelope;
  // The shift c2 absorbs the profile's own index shift C2.
  return EnvelopeConstants{72.0, profile.C2 + 2.0, 4.0};
}

json RunConfig::to_json() const {
  json j;
  j["command"] = to_string(command);
  j["profile"] = profile.to_json();
  j["n"] = n ? json(*n) : json(nullptr);
  j["seed"] = seed;
  j["format"] = to_string(format);
  j["budget_ms"] = budget_ms ? json(*budget_ms) : json(nullptr);
  j["envelope"] = envelope ? json{{"c1", envelope->c1}, {"c2", envelope->c2}, {"c3", envelope->c3}} : json(nullptr);
  j["locality_length"] = locality_length;
  j["random_words"] = random_words;
  j["random_max_length"] = random_max_length;
  j["max_generation_degree"] = max_generation_degree;
  j["witness_count"] = witness_count;
  j["commuting_count"] = commuting_count;
  j["pairwise_max_length"] = pairwise_max_length;
  return j;
}

RunConfig RunConfig::from_json(const json& j) {
  reject_unknown(j,
                 {"command", "profile", "n", "seed", "format", "budget_ms", "envelope", "locality_length",
                  "random_words", "random_max_length", "max_generation_degree", "witness_count", "commuting_count",
                  "pairwise_max_length"},
                 "config");
  RunConfig c;
  if (j.contains("command")) c.command = parse_command(get_as<std::string>(j, "command"));
  if (j.contains("profile")) c.profile = ProfileSpec::from_json(j.at("profile"));
  if (j.contains("n") && !j.at("n").is_null()) c.n = get_as<std::int64_t>(j, "n");
  read_if(j, "seed", c.seed);
  if (j.contains("format")) c.format = parse_format(get_as<std::string>(j, "format"));
  if (j.contains("budget_ms") && !j.at("budget_ms").is_null()) c.budget_ms = get_as<std::int64_t>(j, "budget_ms");
  if (j.contains("envelope") && !j.at("envelope").is_null()) {
    const json& e = j.at("envelope");
    reject_unknown(e, {"c1", "c2", "c3"}, "envelope");
    EnvelopeConstants k;
    read_if(e, "c1", k.c1);
    read_if(e, "c2", k.c2);
    read_if(e, "c3", k.c3);
    c.envelope = k;
  }
  read_if(j, "locality_length", c.locality_length);
  read_if(j, "random_words", c.random_words);
  read_if(j, "random_max_length", c.random_max_length);
  read_if(j, "max_generation_degree", c.max_generation_degree);
  read_if(j, "witness_count", c.witness_count);
  read_if(j, "commuting_count", c.commuting_count);
  read_if(j, "pairwise_max_length", c.pairwise_max_length);

  if (c.n && *c.n < 1) throw ConfigError("n must be at least 1");
  if (c.budget_ms && *c.budget_ms < 0) throw ConfigError("budget_ms must be nonnegative");
  for (auto [name, v] : {std::pair{"locality_length", c.locality_length}, {"random_words", c.random_words},
                         {"random_max_length", c.random_max_length}, {"max_generation_degree", c.max_generation_degree},
                         {"witness_count", c.witness_count}, {"commuting_count", c.commuting_count},
                         {"pairwise_max_length", c.pairwise_max_length}})
    if (v < 0) throw ConfigError(fmt::format("{} must be nonnegative", name));
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path));
  try {
    return from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("config '{}' is not valid JSON: {}", path, e.what()));
  }
}

// ---------------------------------------------------------------------------
// report emission

namespace {

class Emitter {
 public:
  Emitter(std::ostream& out, Format format) : out_(out), format_(format) {}

  void section(std::string name, std::vector<std::string> columns) {
    name_ = std::move(name);
    columns_ = std::move(columns);
    if (format_ == Format::tsv) {
      out_ << "# " << name_ << '\n';
      for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "\t" : "") << columns_[i];
      out_ << '\n';
    }
  }

  void row(const std::vector<ojson>& cells) {
    if (format_ == Format::tsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "\t" : "") << tsv_cell(cells[i]);
      out_ << '\n';
      return;
    }
    ojson obj;
    obj["section"] = name_;
    for (std::size_t i = 0; i < cells.size(); ++i) obj[columns_[i]] = cells[i];
    out_ << obj.dump() << '\n';
  }

  // Records a gating check; returns its value for use as a cell.
  bool check(bool passed) {
    ++checks_;
    if (!passed) ++failures_;
    return passed;
  }

  int finish(Command command) {
    section("summary", {"command", "checks", "failed", "status"});
    row({to_string(command), checks_, failures_, failures_ == 0 ? "pass" : "fail"});
    out_.flush();
    return failures_ == 0 ? 0 : 1;
  }

 private:
  static std::string tsv_cell(const ojson& v) {
    if (v.is_null()) return "na";
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return fmt::format("{:.10g}", v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  std::ostream& out_;
  Format format_;
  std::string name_;
  std::vector<std::string> columns_;
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
};

class Budget {
 public:
  explicit Budget(const std::optional<std::int64_t>& ms) {
    if (ms) deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(*ms);
  }
  void check(const char* stage) const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded(fmt::format("time budget exceeded during {}", stage));
  }
  BallLimits limits() const {
    BallLimits l;
    l.deadline = deadline_;
    return l;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

ojson opt(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::string lamps_string(const WreathElement& u) {
  std::string s;
  for (const auto& [pos, value] : u.lamps()) s += fmt::format("{}{}:{}", s.empty() ? "" : ",", pos, int(value));
  return s.empty() ? "-" : s;
}

// Index n of a verify run needs: the radii, 2|w| + 2 coordinates for the
// longest locality word, and 2(4 + 4r(m)) + 2 for each witness.
SequenceSet build_sequences(const GrowthProfile& profile, std::int64_t n) {
  SequenceSet seqs(profile);
  seqs.extend_to(n);
  return seqs;
}

void extend_for_witnesses(SequenceSet& seqs, std::int64_t count) {
  if (count < 1) return;
  seqs.extend_to(std::max(seqs.size(), count));
  std::int64_t need = 0;
  for (std::int64_t m = 1; m <= count; ++m) need = std::max(need, coordinates_for_length(4 + 4 * seqs.r(m)));
  seqs.extend_to(std::max(seqs.size(), need));
}

std::uint64_t word_seed(std::uint64_t seed, std::uint64_t i) { return seed * 0x9E3779B97F4A7C15ULL + i; }

struct LocalityTally {
  std::int64_t words = 0;
  std::int64_t coordinate_checks = 0;
  std::int64_t triviality_mismatches = 0;
  std::int64_t reconstruction_mismatches = 0;
};

void locality_word(const GroupContext& ctx, const Word& w, LocalityTally& t) {
  const WreathElement u = w_eval(w);
  const bool wreath_trivial = u.is_identity();
  const auto n = static_cast<std::int64_t>(w.size());
  ++t.words;
  for (std::int64_t m = 1; m <= ctx.size(); ++m) {
    if (!spread_ok(ctx, m, n)) continue;
    ++t.coordinate_checks;
    const Permutation p = coordinate_eval(ctx, w, m);
    if (p.is_identity() != wreath_trivial) ++t.triviality_mismatches;
    if (reconstruct_from_lamps(ctx, u, m) != p) ++t.reconstruction_mismatches;
  }
}

bool gating_for(const GrowthProfile& profile, const std::string& check) {
  // The toy profile deliberately sits below the analytic growth hypotheses.
  if (profile.kind() != GrowthProfile::Kind::toy) return true;
  return check != "divisor_growth" && check != "series_bound" && check != "f_lower_bound";
}

}  // namespace

// ---------------------------------------------------------------------------
// commands

int cmd_build(const RunConfig& config, std::ostream& out) {
  Emitter em(out, config.format);
  const std::int64_t N = config.resolved_n();
  const SequenceSet seqs = build_sequences(config.profile.to_profile(), N);
  em.section("sequences", {"n", "f", "d", "q", "r", "d_prime", "d_bertrand", "d_monotone", "f_monotone", "q_range",
                           "r_range", "r_third", "r_congruence", "certified"});
  for (std::int64_t n = 1; n <= N; ++n) {
    const Certificate& c = seqs.certificate(n);
    em.row({n, seqs.f(n), seqs.d(n), seqs.q(n), seqs.r(n), c.d_prime, c.d_bertrand, c.d_monotone, c.f_monotone,
            c.q_range, c.r_range, c.r_third, c.r_congruence, em.check(c.all())});
  }
  return em.finish(config.command);
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  Emitter em(out, config.format);
  const Budget budget(config.budget_ms);
  const std::int64_t N = config.resolved_n();
  const GrowthProfile profile = config.profile.to_profile();

  SequenceSet seqs = build_sequences(profile, N);
  const HypothesisReport hyp = validate_hypotheses(seqs, N);
  em.section("hypotheses", {"check", "pass", "gating", "first_failure", "detail"});
  for (const auto& c : hyp.checks) {
    const bool gating = gating_for(profile, c.name);
    em.row({c.name, gating ? em.check(c.passed) : c.passed, gating, c.first_failure, c.detail});
  }
  budget.check("hypotheses");

  em.section("generation", {"n", "d", "r", "order_is_half_factorial"});
  for (std::int64_t n = 1; n <= N; ++n) {
    const std::int64_t d = seqs.d(n), r = seqs.r(n);
    if (d > config.max_generation_degree) {
      em.row({n, d, r, nullptr});
      continue;
    }
    em.row({n, d, r, em.check(verify_alt_generation(d, r, r))});
    budget.check("generation");
  }

  const std::int64_t witnesses = std::min(config.witness_count, N);
  const std::int64_t commuting = std::min(config.commuting_count, N);
  const std::int64_t longest = std::max(config.locality_length, config.random_max_length);
  extend_for_witnesses(seqs, witnesses);
  seqs.extend_to(std::max({seqs.size(), commuting, coordinates_for_length(longest)}));
  const GroupContext ctx(std::move(seqs));

  std::int64_t commuting_failures = 0;
  for (std::int64_t m = 1; m <= commuting; ++m)
    for (std::int64_t n = 1; n <= commuting; ++n)
      if (conjugates_commute(ctx, m, n) != (m != n)) ++commuting_failures;
  em.section("commuting", {"indices", "pairs", "failures", "pass"});
  em.row({commuting, commuting * commuting, commuting_failures, em.check(commuting_failures == 0)});
  budget.check("commuting");

  LocalityTally tally;
  ReducedWordStream stream(static_cast<std::size_t>(config.locality_length));
  std::int64_t exhaustive = 0;
  while (auto w = stream.next()) {
    locality_word(ctx, *w, tally);
    ++exhaustive;
    if ((exhaustive & 255) == 0) budget.check("locality");
  }
  for (std::int64_t i = 0; i < config.random_words && config.random_max_length > 0; ++i) {
    const auto len = static_cast<std::size_t>(1 + i % config.random_max_length);
    locality_word(ctx, random_reduced(len, word_seed(config.seed, static_cast<std::uint64_t>(i))), tally);
    if ((i & 255) == 0) budget.check("locality");
  }
  em.section("locality", {"exhaustive_words", "random_words", "coordinate_checks", "triviality_mismatches",
                          "reconstruction_mismatches", "pass"});
  em.row({exhaustive, tally.words - exhaustive, tally.coordinate_checks, tally.triviality_mismatches,
          tally.reconstruction_mismatches,
          em.check(tally.triviality_mismatches == 0 && tally.reconstruction_mismatches == 0)});

  em.section("witness", {"m", "r", "length", "pass", "detail"});
  for (std::int64_t m = 1; m <= witnesses; ++m) {
    const std::int64_t r = ctx.radius(m);
    try {
      const Word w = witness(ctx, m);
      em.row({m, r, static_cast<std::int64_t>(w.size()), em.check(true), "ok"});
    } catch (const WitnessCheckFailed& e) {
      em.row({m, r, nullptr, em.check(false), e.what()});
    }
  }
  return em.finish(config.command);
}

int cmd_growth(const RunConfig& config, std::ostream& out) {
  Emitter em(out, config.format);
  const Budget budget(config.budget_ms);
  const std::int64_t N = config.resolved_n();
  const GrowthProfile profile = config.profile.to_profile();
  const std::int64_t chain_n = std::min<std::int64_t>(N, 4);
  const GroupContext ctx(build_sequences(profile, std::max(2 * N, coordinates_for_length(2 * chain_n))));

  if (profile.has_log_F()) {
    const EnvelopeReport rep = envelope_report(ctx, profile, N, config.resolved_envelope());
    em.section("bounds", {"n", "log_F", "lower_log", "upper_log", "full_upper_log", "lower_le_upper", "full_ge_upper",
                          "env_lower", "env_upper", "env_full_upper", "lower_inside", "upper_inside", "full_inside",
                          "bprime_ok"});
    for (const auto& r : rep.rows) {
      em.row({r.n, r.log_F, r.rf_lower, r.rf_upper, r.full_upper, em.check(r.rf_lower <= r.rf_upper),
              em.check(r.full_upper >= r.rf_upper), opt(r.env_lower), opt(r.env_upper), opt(r.env_full_upper),
              em.check(r.lower_inside), em.check(r.upper_inside), em.check(r.full_inside), r.bprime_ok});
    }
  } else {
    const auto points = rf_lower_points(ctx, 2 * N);
    em.section("bounds", {"n", "f", "lower_log", "upper_log", "full_upper_log", "lower_le_upper", "full_ge_upper"});
    for (std::int64_t n = 1; n <= N; ++n) {
      const double lo = rf_lower_at(points, n);
      const double up = rf_upper(ctx, n).log_magnitude;
      const double full = full_rf_upper(ctx, n).log_magnitude;
      em.row({n, ctx.sequences().f(n), lo, up, full, em.check(lo <= up), em.check(full >= up)});
    }
  }
  budget.check("bounds");

  em.section("factorial_sandwich", {"n", "f", "d", "pass"});
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(N, 20); ++n) {
    const auto f = static_cast<std::uint64_t>(ctx.sequences().f(n));
    const auto d = static_cast<std::uint64_t>(ctx.sequences().d(n));
    const BigInt mid = factorial(d) / 2;
    em.row({n, f, d, em.check(factorial(f) / 2 <= mid && mid <= factorial(2 * f))});
  }

  em.section("chain", {"n", "ball_size", "upper_log", "full_upper_log", "chain_bound_log", "pass"});
  for (std::int64_t n = 1; n <= chain_n; ++n) {
    const auto size = static_cast<double>(ball(ctx, n, budget.limits()).size());
    const double up = rf_upper(ctx, n).log_magnitude;
    const double full = full_rf_upper(ctx, n).log_magnitude;
    const double bound = size * size * rf_upper(ctx, 2 * n).log_magnitude;
    em.row({n, static_cast<std::int64_t>(size), up, full, bound, em.check(up <= full && full <= bound)});
  }
  budget.check("chain");

  std::int64_t sandwich_failures = 0;
  for (std::uint64_t n = 1; n <= 100000; ++n) {
    const double x = static_cast<double>(n);
    const double lf = ln_factorial(x);
    if (lf < x * std::log(x) - x - 1e-9 * x || lf > x * std::log(x) + 1e-9 * x) ++sandwich_failures;
  }
  em.section("stirling_sandwich", {"n_max", "failures", "pass"});
  em.row({100000, sandwich_failures, em.check(sandwich_failures == 0)});

  if (profile.has_log_F()) {
    em.section("stirling", {"K", "N", "first_n", "sup_a", "sup_b", "tail_sup_a", "tail_sup_b", "g_sandwich", "pass"});
    const std::int64_t stirling_n = profile.log_F_limit() ? std::min<std::int64_t>(1000, *profile.log_F_limit()) : 1000;
    for (std::int64_t K = 1; K <= 3; ++K) {
      const StirlingReport s = stirling_check(profile, stirling_n, K);
      em.row({K, s.N, s.first_n, s.sup_a, s.sup_b, s.tail_sup_a, s.tail_sup_b, s.g_sandwich, em.check(s.passed)});
    }
  }
  return em.finish(config.command);
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  Emitter em(out, config.format);
  const Budget budget(config.budget_ms);
  const std::int64_t N = config.resolved_n();
  SequenceSet seqs = build_sequences(config.profile.to_profile(), coordinates_for_length(2 * N));
  extend_for_witnesses(seqs, std::min(config.witness_count, N));
  const GroupContext ctx(std::move(seqs));

  em.section("ball", {"n", "ball_size", "pairwise_size", "rho_distinct", "rho_injective", "sizes_match"});
  std::vector<BallEntry> last;
  for (std::int64_t n = 1; n <= N; ++n) {
    std::vector<BallEntry> entries = ball(ctx, n, budget.limits());
    std::set<std::vector<std::vector<Point>>> images;
    for (const auto& e : entries) {
      std::vector<std::vector<Point>> key;
      for (const auto& p : rho(ctx, e.word, n)) key.emplace_back(p.images().begin(), p.images().end());
      images.insert(std::move(key));
    }
    ojson pairwise = nullptr;
    ojson match = nullptr;
    if (n <= config.pairwise_max_length) {
      std::vector<Word> reps;
      for (const Word& w : enumerate_reduced(static_cast<std::size_t>(n))) {
        const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Word& r) { return equal(ctx, w, r); });
        if (!seen) reps.push_back(w);
        budget.check("pairwise oracle");
      }
      pairwise = static_cast<std::int64_t>(reps.size());
      match = em.check(reps.size() == entries.size());
    }
    const auto distinct = static_cast<std::int64_t>(images.size());
    em.row({n, static_cast<std::int64_t>(entries.size()), pairwise, distinct,
            em.check(distinct == static_cast<std::int64_t>(entries.size())), match});
    last = std::move(entries);
  }

  em.section("elements", {"index", "word", "length", "shift", "lamps"});
  for (std::size_t i = 0; i < last.size(); ++i) {
    const auto& e = last[i];
    const std::string word = e.word.empty() ? "1" : e.word.to_string();
    em.row({static_cast<std::int64_t>(i), word, static_cast<std::int64_t>(e.word.size()), e.signature.wreath.shift(),
            lamps_string(e.signature.wreath)});
  }

  em.section("witness", {"m", "r", "word_length", "pass", "detail"});
  for (std::int64_t m = 1; m <= std::min(config.witness_count, N); ++m) {
    try {
      const Word w = witness(ctx, m);
      em.row({m, ctx.radius(m), static_cast<std::int64_t>(w.size()), em.check(true), "ok"});
    } catch (const WitnessCheckFailed& e) {
      em.row({m, ctx.radius(m), nullptr, em.check(false), e.what()});
    }
  }
  return em.finish(config.command);
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.command) {
    case Command::build: return cmd_build(config, out);
    case Command::verify: return cmd_verify(config, out);
    case Command::growth: return cmd_growth(config, out);
    case Command::oracle: return cmd_oracle(config, out);
  }
  throw ConfigError("no command");
}

}  // namespace bhn::cli
