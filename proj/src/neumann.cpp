#include "bhn/neumann.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "bhn/error.hpp"

namespace bhn {

// ---------------------------------------------------------------------------
// context

GroupContext::GroupContext(SequenceSet seqs) : seqs_(std::move(seqs)) {
  generators_.reserve(static_cast<std::size_t>(seqs_.size()));
  for (std::int64_t m = 1; m <= seqs_.size(); ++m) {
    const auto d = static_cast<std::uint64_t>(seqs_.d(m));
    const auto r = static_cast<std::uint64_t>(seqs_.r(m));
    generators_.push_back(make_generators(d, r, r));
  }
}

GroupContext GroupContext::from_profile(const GrowthProfile& profile, std::int64_t coordinates) {
  SequenceSet seqs(profile);
  seqs.extend_to(coordinates);
  return GroupContext(std::move(seqs));
}

std::size_t GroupContext::slot(std::int64_t m) const {
  if (m < 1 || m > size())
    throw NotMaterialized(fmt::format("coordinate {} requested but only {} are built", m, size()));
  return static_cast<std::size_t>(m - 1);
}

std::int64_t GroupContext::degree(std::int64_t m) const { return seqs_.d(static_cast<std::int64_t>(slot(m)) + 1); }
std::int64_t GroupContext::radius(std::int64_t m) const { return seqs_.r(static_cast<std::int64_t>(slot(m)) + 1); }
const Generators& GroupContext::generators(std::int64_t m) const { return generators_[slot(m)]; }

std::int64_t coordinates_for_length(std::int64_t n) { return 2 * n + 2; }

// ---------------------------------------------------------------------------
// coordinate evaluation

namespace {

// A permutation p of {0..d-1} held as p(x) = table[(x + offset) mod d].
// Right multiplication by the d-cycle only moves the offset; right
// multiplication by a 3-cycle touches three table entries.
class ShiftedTable {
 public:
  explicit ShiftedTable(std::size_t d) : d_(d), table_(d) { std::iota(table_.begin(), table_.end(), Point{0}); }

  void shift(std::int64_t k) {
    const auto d = static_cast<std::int64_t>(d_);
    offset_ = static_cast<std::size_t>(((static_cast<std::int64_t>(offset_) + k) % d + d) % d);
  }

  // p <- p o c, where c maps pts[0] -> pts[1] -> pts[2] -> pts[0].
  void multiply_cycle(const std::array<Point, 3>& pts) {
    const Point v0 = at(pts[0]), v1 = at(pts[1]), v2 = at(pts[2]);
    at(pts[0]) = v1;
    at(pts[1]) = v2;
    at(pts[2]) = v0;
  }

  void multiply_cycle_inverse(const std::array<Point, 3>& pts) {
    multiply_cycle({pts[2], pts[1], pts[0]});
  }

  bool is_identity() const {
    const std::size_t wrap = d_ - offset_;
    for (std::size_t x = 0; x < wrap; ++x)
      if (table_[x + offset_] != x) return false;
    for (std::size_t x = wrap; x < d_; ++x)
      if (table_[x - wrap] != x) return false;
    return true;
  }

  Permutation materialize() const {
    std::vector<Point> images(d_);
    std::rotate_copy(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(offset_), table_.end(), images.begin());
    return unchecked_permutation(std::move(images));
  }

 private:
  Point& at(Point x) { return table_[(x + offset_) % d_]; }

  std::size_t d_;
  std::size_t offset_ = 0;
  std::vector<Point> table_;
};

std::array<Point, 3> tripod(const Generators& g) {
  const Point r1 = g.beta(0);
  return {0, r1, g.beta(r1)};
}

std::array<Point, 3> tripod_at(std::int64_t d, std::int64_t r, std::int64_t i) {
  const std::int64_t base = ((i % d) + d) % d;
  return {static_cast<Point>(base), static_cast<Point>((base + r) % d), static_cast<Point>((base + 2 * r) % d)};
}

ShiftedTable evaluate(const GroupContext& ctx, const Word& w, std::int64_t m) {
  const Generators& g = ctx.generators(m);
  const auto beta = tripod(g);
  ShiftedTable acc(g.alpha.degree());
  for (Letter l : w) {
    switch (l) {
      case Letter::a: acc.shift(1); break;
      case Letter::A: acc.shift(-1); break;
      case Letter::b: acc.multiply_cycle(beta); break;
      case Letter::B: acc.multiply_cycle_inverse(beta); break;
    }
  }
  return acc;
}

}  // namespace

Permutation coordinate_eval(const GroupContext& ctx, const Word& w, std::int64_t m) {
  return evaluate(ctx, w, m).materialize();
}

bool coordinate_is_identity(const GroupContext& ctx, const Word& w, std::int64_t m) {
  return evaluate(ctx, w, m).is_identity();
}

Permutation reconstruct_from_lamps(const GroupContext& ctx, const WreathElement& u, std::int64_t m) {
  const std::int64_t d = ctx.degree(m);
  const std::int64_t r = ctx.radius(m);
  ShiftedTable acc(static_cast<std::size_t>(d));
  for (const auto& [i, c] : lamp_data(u).exponents) {
    const auto pts = tripod_at(d, r, i);
    for (int k = 0; k < c; ++k) acc.multiply_cycle(pts);
  }
  acc.shift(u.shift());
  return acc.materialize();
}

// ---------------------------------------------------------------------------
// word problem

bool spread_holds(std::int64_t d, std::int64_t r, std::int64_t n) { return r >= 2 * n + 1 && d - 2 * r >= 2 * n + 1; }

bool spread_ok(const GroupContext& ctx, std::int64_t m, std::int64_t n) {
  return spread_holds(ctx.degree(m), ctx.radius(m), n);
}

std::int64_t cutoff(const GroupContext& ctx, std::int64_t n) {
  if (n < 0) throw PreconditionError("cutoff needs n >= 0");
  const std::int64_t scan = 2 * n + 1;
  if (ctx.size() < scan + 1)
    throw NotMaterialized(fmt::format("cutoff({}) needs {} coordinates, have {}", n, scan + 1, ctx.size()));
  std::int64_t m0 = 0;
  for (std::int64_t m = 1; m <= scan; ++m)
    if (!spread_ok(ctx, m, n)) m0 = m;
  // Past the scan, r(m) > q(m) >= m >= 2n + 2 and d(m) - 2r(m) > d(m)/3 >=
  // d(scan + 1)/3, so one boundary check covers every larger coordinate.
  const std::int64_t edge = scan + 1;
  const SequenceSet& seqs = ctx.sequences();
  const bool tail_ok = spread_ok(ctx, edge, n) && seqs.d(edge) >= 3 * (2 * n + 1) && seqs.q(edge) >= edge &&
                       3 * seqs.r(edge) < seqs.d(edge);
  if (!tail_ok)
    throw SpreadAssertionFailed(fmt::format("spread condition for length {} not certified beyond coordinate {} (d = {}, r = {})",
                                            n, edge, seqs.d(edge), seqs.r(edge)));
  return m0;
}

bool is_trivial(const GroupContext& ctx, const Word& w) {
  if (!w_eval(w).is_identity()) return false;
  const std::int64_t m0 = cutoff(ctx, static_cast<std::int64_t>(w.size()));
  for (std::int64_t m = 1; m <= m0; ++m)
    if (!coordinate_is_identity(ctx, w, m)) return false;
  return true;
}

bool equal(const GroupContext& ctx, const Word& u, const Word& v) { return is_trivial(ctx, concat(u, inverse(v))); }

std::vector<Permutation> rho(const GroupContext& ctx, const Word& w, std::int64_t n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(2 * n));
  for (std::int64_t m = 1; m <= 2 * n; ++m) out.push_back(coordinate_eval(ctx, w, m));
  return out;
}

bool conjugates_commute(const GroupContext& ctx, std::int64_t m, std::int64_t n) {
  const Word b = Word::parse("b");
  const Word w = commutator(b, conjugate(b, letter_power(Letter::a, ctx.radius(n))));
  return coordinate_is_identity(ctx, w, m);
}

// ---------------------------------------------------------------------------
// signatures, witnesses, balls

std::string ElementSignature::bytes() const {
  std::string out;
  auto put = [&out](const void* p, std::size_t n) { out.append(static_cast<const char*>(p), n); };
  const std::uint64_t count = low_coords.size();
  put(&count, sizeof count);
  for (const auto& p : low_coords) {
    const std::uint64_t deg = p.degree();
    put(&deg, sizeof deg);
    put(p.images().data(), p.images().size_bytes());
  }
  const std::int64_t shift = wreath.shift();
  put(&shift, sizeof shift);
  for (const auto& [pos, value] : wreath.lamps()) {
    put(&pos, sizeof pos);
    put(&value, sizeof value);
  }
  return out;
}

ElementSignature signature(const GroupContext& ctx, const Word& w, std::int64_t n_class) {
  if (static_cast<std::int64_t>(w.size()) > n_class)
    throw PreconditionError(fmt::format("word of length {} exceeds length class {}", w.size(), n_class));
  ElementSignature sig;
  const std::int64_t m0 = cutoff(ctx, 2 * n_class);
  sig.low_coords.reserve(static_cast<std::size_t>(m0));
  for (std::int64_t m = 1; m <= m0; ++m) sig.low_coords.push_back(coordinate_eval(ctx, w, m));
  sig.wreath = w_eval(w);
  return sig;
}

Word witness(const GroupContext& ctx, std::int64_t m) {
  const std::int64_t r = ctx.radius(m);
  const Word b = Word::parse("b");
  const Word w = commutator(b, conjugate(b, letter_power(Letter::a, r)));
  const auto len = static_cast<std::int64_t>(w.size());
  if (len > 4 + 4 * r)
    throw WitnessCheckFailed(fmt::format("witness({}) has length {} > 4 + 4r = {}", m, len, 4 + 4 * r));
  if (!w_eval(w).is_identity()) throw WitnessCheckFailed(fmt::format("witness({}) is nontrivial in C3 wr Z", m));
  const std::int64_t m0 = cutoff(ctx, len);
  for (std::int64_t k = 1; k <= m0; ++k) {
    const bool trivial = coordinate_is_identity(ctx, w, k);
    if (k == m && trivial) throw WitnessCheckFailed(fmt::format("witness({}) is trivial at its own coordinate", m));
    if (k != m && !trivial)
      throw WitnessCheckFailed(fmt::format("witness({}) is nontrivial at coordinate {}", m, k));
  }
  return w;
}

std::vector<BallEntry> ball(const GroupContext& ctx, std::int64_t n, const BallLimits& limits) {
  if (n < 0) throw PreconditionError("ball radius must be nonnegative");
  std::vector<BallEntry> entries;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets;

  auto insert_if_absent = [&](Word w) -> bool {
    ElementSignature sig = signature(ctx, w, n);
    const std::size_t h = std::hash<std::string>{}(sig.bytes());
    auto& bucket = buckets[h];
    for (std::size_t idx : bucket)
      if (entries[idx].signature == sig) return false;
    bucket.push_back(entries.size());
    entries.push_back({std::move(w), std::move(sig)});
    if (entries.size() > limits.max_elements)
      throw BudgetExceeded(fmt::format("ball({}) exceeds {} elements", n, limits.max_elements));
    if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline)
      throw BudgetExceeded(fmt::format("ball({}) exceeded its time budget", n));
    return true;
  };

  insert_if_absent(Word{});
  std::size_t layer_begin = 0;
  for (std::int64_t len = 1; len <= n; ++len) {
    const std::size_t layer_end = entries.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (Letter l : kLetters) {
        const Word& base = entries[idx].word;
        if (!base.empty() && base.letters().back() == inverse(l)) continue;
        const Letter single[] = {l};
        insert_if_absent(concat(base, free_reduce(single)));
      }
    }
    layer_begin = layer_end;
  }
  return entries;
}

}  // namespace bhn
