// Brute-force reference implementations used to cross-check the library.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "bhn/neumann.hpp"
#include "bhn/perm.hpp"
#include "bhn/words.hpp"

namespace oracle {

using Images = std::vector<bhn::Point>;

inline Images compose_images(const Images& p, const Images& q) {
  Images out(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[q[x]];
  return out;
}

/// Size of the group generated by `gens`, by breadth-first closure.
inline std::size_t closure_order(const std::vector<bhn::Permutation>& gens) {
  const std::size_t d = gens.front().degree();
  Images id(d);
  for (std::size_t i = 0; i < d; ++i) id[i] = static_cast<bhn::Point>(i);
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Images h = compose_images(Images(s.images().begin(), s.images().end()), g);
        if (seen.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

inline std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> composite(n + 1, false);
  composite[0] = true;
  if (n >= 1) composite[1] = true;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (!composite[p])
      for (std::size_t k = p * p; k <= n; k += p) composite[k] = true;
  std::vector<bool> prime(n + 1);
  for (std::size_t i = 0; i <= n; ++i) prime[i] = !composite[i];
  return prime;
}

/// Trial division for 64-bit n.
inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// w(alpha, beta) by explicit permutation products.
inline bhn::Permutation word_in(const bhn::Permutation& alpha, const bhn::Permutation& beta, const bhn::Word& w) {
  const bhn::Permutation A = bhn::inverse(alpha), B = bhn::inverse(beta);
  bhn::Permutation acc = bhn::identity(alpha.degree());
  for (bhn::Letter l : w) {
    switch (l) {
      case bhn::Letter::a: acc = acc * alpha; break;
      case bhn::Letter::A: acc = acc * A; break;
      case bhn::Letter::b: acc = acc * beta; break;
      case bhn::Letter::B: acc = acc * B; break;
    }
  }
  return acc;
}

/// Lamplighter walk: a lamp cursor moving on Z, b adds 1 at the cursor.
struct Walk {
  std::int64_t cursor = 0;
  std::map<std::int64_t, int> lamps;

  explicit Walk(const bhn::Word& w) {
    for (bhn::Letter l : w) {
      if (l == bhn::Letter::a) ++cursor;
      if (l == bhn::Letter::A) --cursor;
      if (l == bhn::Letter::b) lamps[cursor] = (lamps[cursor] + 1) % 3;
      if (l == bhn::Letter::B) lamps[cursor] = (lamps[cursor] + 2) % 3;
    }
    std::erase_if(lamps, [](const auto& kv) { return kv.second == 0; });
  }
  bool trivial() const { return cursor == 0 && lamps.empty(); }
};

/// Trivial iff wreath-trivial and trivial at every coordinate up to `coords`.
inline bool trivial_by_scan(const bhn::GroupContext& ctx, const bhn::Word& w, std::int64_t coords) {
  if (!Walk(w).trivial()) return false;
  for (std::int64_t m = 1; m <= coords; ++m) {
    const auto& g = ctx.generators(m);
    if (!word_in(g.alpha, g.beta, w).is_identity()) return false;
  }
  return true;
}

/// Number of distinct group elements among the reduced words of length
/// <= n, by pairwise comparison with bhn::equal.
inline std::size_t pairwise_ball_size(const bhn::GroupContext& ctx, std::size_t n) {
  std::vector<bhn::Word> reps;
  for (const auto& w : bhn::enumerate_reduced(n)) {
    bool seen = false;
    for (const auto& r : reps)
      if (bhn::equal(ctx, w, r)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(w);
  }
  return reps.size();
}

}  // namespace oracle
