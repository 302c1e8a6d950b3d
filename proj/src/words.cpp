#include "bhn/words.hpp"

#include <random>

#include <fmt/format.h>

#include "bhn/error.hpp"

namespace bhn {

namespace {

int letter_index(Letter l) {
  for (int i = 0; i < 4; ++i)
    if (kLetters[i] == l) return i;
  return -1;
}

// Unbiased draw in [0, bound) straight from the engine output; the standard
// distributions are not specified bit-exactly across library vendors.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': case 'A': case 'b': case 'B': raw.push_back(static_cast<Letter>(c)); break;
      default: throw PreconditionError(fmt::format("invalid letter '{}' in word \"{}\"", c, text));
    }
  }
  return free_reduce(raw);
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(static_cast<char>(l));
  return s;
}

Word free_reduce(std::span<const Letter> raw) {
  Word w;
  auto& out = w.letters_;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return w;
}

Word free_reduce(std::string_view raw) { return Word::parse(raw); }

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> raw(u.begin(), u.end());
  raw.insert(raw.end(), v.begin(), v.end());
  return free_reduce(raw);
}

Word inverse(const Word& w) {
  std::vector<Letter> raw;
  raw.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(inverse(*it));
  return free_reduce(raw);
}

Word letter_power(Letter l, std::int64_t k) {
  const Letter use = k < 0 ? inverse(l) : l;
  std::vector<Letter> raw(static_cast<std::size_t>(k < 0 ? -k : k), use);
  return free_reduce(raw);
}

Word commutator(const Word& u, const Word& v) {
  return concat(concat(inverse(u), inverse(v)), concat(u, v));
}

Word conjugate(const Word& u, const Word& v) { return concat(concat(v, u), inverse(v)); }

std::uint64_t reduced_count(std::size_t k) {
  if (k == 0) return 1;
  std::uint64_t n = 4;
  for (std::size_t i = 1; i < k; ++i) n *= 3;
  return n;
}

bool ReducedWordStream::advance() {
  // Odometer over reduced words of the current length; false on overflow.
  for (std::size_t pos = digits_.size(); pos-- > 0;) {
    int next = digits_[pos] + 1;
    if (pos > 0 && next < 4 && kLetters[next] == inverse(kLetters[digits_[pos - 1]])) ++next;
    if (next >= 4) continue;
    digits_[pos] = next;
    for (std::size_t q = pos + 1; q < digits_.size(); ++q)
      digits_[q] = kLetters[0] == inverse(kLetters[digits_[q - 1]]) ? 1 : 0;
    return true;
  }
  return false;
}

std::optional<Word> ReducedWordStream::next() {
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    if (++length_ > max_length_) return std::nullopt;
    digits_.assign(length_, 0);
    // a then a, a, ... is reduced, so all-zero digits start every length.
  }
  if (length_ > max_length_) return std::nullopt;
  std::vector<Letter> raw;
  raw.reserve(digits_.size());
  for (int d : digits_) raw.push_back(kLetters[d]);
  return free_reduce(raw);
}

std::vector<Word> enumerate_reduced(std::size_t max_length) {
  std::vector<Word> all;
  ReducedWordStream stream(max_length);
  while (auto w = stream.next()) all.push_back(std::move(*w));
  return all;
}

Word random_reduced(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Letter> raw;
  raw.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw.empty()) {
      raw.push_back(kLetters[draw(rng, 4)]);
      continue;
    }
    // Pick among the three letters that do not cancel the previous one.
    const int forbidden = letter_index(inverse(raw.back()));
    int choice = static_cast<int>(draw(rng, 3));
    if (choice >= forbidden) ++choice;
    raw.push_back(kLetters[choice]);
  }
  return free_reduce(raw);
}

}  // namespace bhn
