#include "bhn/schreier.hpp"

#include <algorithm>
#include <random>

#include <fmt/format.h>

#include "bhn/error.hpp"
#include "bhn/seqgen.hpp"

namespace bhn {

namespace {

bool fixes(const Permutation& p, Point x) { return p(x) == x; }

std::optional<Point> first_moved(const Permutation& p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p(x) != x) return x;
  return std::nullopt;
}

}  // namespace

StabilizerChain StabilizerChain::build(std::span<const Permutation> generators) {
  if (generators.empty()) throw PreconditionError("build_chain needs at least one generator");
  const std::size_t degree = generators.front().degree();
  StabilizerChain chain(degree);
  bool all_even = true;
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw PreconditionError(fmt::format("generator degree {} differs from {}", g.degree(), degree));
    all_even = all_even && is_even(g);
    if (!g.is_identity()) chain.strong_.push_back(g);
  }
  chain.order_bound_ = factorial(degree);
  if (all_even && degree >= 2) chain.order_bound_ /= 2;
  if (chain.strong_.empty()) return chain;

  for (const auto& g : chain.strong_) {
    const bool moves_base =
        std::any_of(chain.base_.begin(), chain.base_.end(), [&](Point b) { return !fixes(g, b); });
    if (!moves_base) chain.base_.push_back(*first_moved(g));
  }
  const std::vector<Point> initial_base = chain.base_;
  chain.base_.clear();
  for (Point b : initial_base) chain.add_level(b);
  chain.random_phase();
  chain.run();
  return chain;
}

void StabilizerChain::add_level(Point base_point) {
  const std::size_t k = levels_.size();
  base_.push_back(base_point);
  Level level;
  level.base_point = base_point;
  level.slot.assign(degree_, -1);
  level.orbit.push_back(base_point);
  level.slot[base_point] = 0;
  level.reps.push_back(Permutation::identity(degree_));
  level.rep_inverses.push_back(Permutation::identity(degree_));
  level.tested.emplace_back();
  for (std::size_t i = 0; i < strong_.size(); ++i) {
    bool stabilizes = true;
    for (std::size_t j = 0; j < k && stabilizes; ++j) stabilizes = fixes(strong_[i], base_[j]);
    if (stabilizes) level.generators.push_back(i);
  }
  levels_.push_back(std::move(level));
  extend_orbit(levels_.back());
}

void StabilizerChain::extend_orbit(Level& level) {
  // Existing transversal elements are kept so earlier Schreier tests stay valid.
  for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
    for (std::size_t gi : level.generators) {
      const Permutation& s = strong_[gi];
      const Point image = s(level.orbit[idx]);
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      level.reps.push_back(compose(s, level.reps[idx]));
      level.rep_inverses.push_back(inverse(level.reps.back()));
      level.tested.emplace_back();
    }
  }
  for (auto& row : level.tested) row.resize(level.generators.size(), 0);
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation h, std::size_t from) const {
  for (std::size_t k = from; k < levels_.size(); ++k) {
    const Level& level = levels_[k];
    const std::int32_t slot = level.slot[h(level.base_point)];
    if (slot < 0) return {std::move(h), k};
    h = compose(level.rep_inverses[slot], h);
  }
  return {std::move(h), levels_.size()};
}

bool StabilizerChain::reached_order_bound() const { return order() == order_bound_; }

void StabilizerChain::add_strong(Permutation p, std::size_t from, std::size_t to) {
  if (to == levels_.size()) add_level(*first_moved(p));
  strong_.push_back(std::move(p));
  for (std::size_t l = from; l <= to; ++l) {
    levels_[l].generators.push_back(strong_.size() - 1);
    extend_orbit(levels_[l]);
  }
}

void StabilizerChain::random_phase() {
  // Sifts product-replacement elements until the orbit product reaches the
  // order bound or a run of sifts succeeds. Only speed depends on this
  // phase; run() completes the chain either way.
  constexpr std::size_t kSlots = 10;
  constexpr int kWarmup = 50;
  constexpr int kQuietRun = 40;
  std::mt19937_64 rng(0x5eed0000ULL + degree_);
  std::vector<Permutation> slots;
  for (std::size_t i = 0; i < kSlots; ++i) slots.push_back(strong_[i % strong_.size()]);
  Permutation acc = Permutation::identity(degree_);
  auto step = [&]() -> const Permutation& {
    const std::size_t i = rng() % kSlots;
    std::size_t j = rng() % (kSlots - 1);
    if (j >= i) ++j;
    slots[i] = (rng() & 1) ? compose(slots[i], slots[j]) : compose(slots[i], inverse(slots[j]));
    acc = compose(acc, slots[i]);
    return acc;
  };
  for (int w = 0; w < kWarmup; ++w) step();
  int quiet = 0;
  while (quiet < kQuietRun && !reached_order_bound()) {
    SiftResult r = sift(step(), 0);
    if (r.level == levels_.size() && r.residue.is_identity()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    add_strong(std::move(r.residue), std::min<std::size_t>(1, r.level), r.level);
  }
}

void StabilizerChain::run() {
  // The orbit product is always a lower bound for the order of the group
  // generated so far, so reaching |Sym| or |Alt| certifies completeness.
  if (reached_order_bound()) return;
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t idx = 0; idx < levels_[i].orbit.size() && !restarted; ++idx) {
      for (std::size_t g = 0; g < levels_[i].generators.size() && !restarted; ++g) {
        Level& level = levels_[i];
        if (level.tested[idx][g]) continue;
        level.tested[idx][g] = 1;
        const Permutation& s = strong_[level.generators[g]];
        const Point image = s(level.orbit[idx]);
        const std::int32_t target = level.slot[image];
        Permutation schreier = compose(level.rep_inverses[target], compose(s, level.reps[idx]));
        SiftResult r = sift(std::move(schreier), i + 1);
        if (r.level == levels_.size() && r.residue.is_identity()) continue;

        const std::size_t j = r.level;
        add_strong(std::move(r.residue), i + 1, j);
        if (reached_order_bound()) return;
        i = j + 1;  // the outer loop decrements back to j
        restarted = true;
      }
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw PreconditionError(fmt::format("degree mismatch: {} vs chain degree {}", p.degree(), degree_));
  SiftResult r = sift(p, 0);
  return r.level == levels_.size() && r.residue.is_identity();
}

StabilizerChain build_chain(std::span<const Permutation> generators) { return StabilizerChain::build(generators); }

BigInt group_order(const StabilizerChain& chain) { return chain.order(); }

bool contains(const StabilizerChain& chain, const Permutation& p) { return chain.contains(p); }

bool verify_alt_generation(std::uint64_t d, std::uint64_t r1, std::uint64_t r2) {
  if (d < 5 || !is_prime(d)) throw PreconditionError(fmt::format("degree {} must be a prime at least 5", d));
  const Generators gens = make_generators(d, r1, r2);
  const Permutation both[] = {gens.alpha, gens.beta};
  return group_order(build_chain(both)) == factorial(d) / 2;
}

}  // namespace bhn
