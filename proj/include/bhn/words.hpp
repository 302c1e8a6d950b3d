#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bhn {

/// Letters of F(x, y) with x = a, y = b; upper case is the inverse.
enum class Letter : char { a = 'a', A = 'A', b = 'b', B = 'B' };

inline constexpr Letter kLetters[4] = {Letter::a, Letter::A, Letter::b, Letter::B};

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    case Letter::B: return Letter::b;
  }
  return l;
}

/// A freely reduced word over {a, A, b, B}.
class Word {
 public:
  Word() = default;

  /// Parses an ASCII string over {a, A, b, B} and freely reduces it.
  /// Any other character throws PreconditionError.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend Word free_reduce(std::span<const Letter> raw);
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> raw);
Word free_reduce(std::string_view raw);

/// Reduced product u v.
Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
/// l^k for k of either sign (l^-k uses the inverse letter).
Word letter_power(Letter l, std::int64_t k);

/// [u, v] = u^-1 v^-1 u v, reduced.
Word commutator(const Word& u, const Word& v);
/// v u v^-1, reduced.
Word conjugate(const Word& u, const Word& v);

/// Number of reduced words of length exactly k: 1 for k = 0, else 4 * 3^(k-1).
std::uint64_t reduced_count(std::size_t k);

/// Restartable stream of all reduced words of length <= max_length: by
/// length, then lexicographically in the letter order a, A, b, B.
class ReducedWordStream {
 public:
  explicit ReducedWordStream(std::size_t max_length) : max_length_(max_length) {}
  std::optional<Word> next();

 private:
  bool advance();

  std::size_t max_length_;
  std::size_t length_ = 0;
  bool started_ = false;
  std::vector<int> digits_;  // indices into kLetters
};

std::vector<Word> enumerate_reduced(std::size_t max_length);

/// Uniform reduced word of length exactly n; same seed gives the same word.
Word random_reduced(std::size_t n, std::uint64_t seed);

}  // namespace bhn
