#include <doctest.h>

#include <set>

#include "bhn/error.hpp"
#include "bhn/words.hpp"

using namespace bhn;

namespace {

// All strings over {a, A, b, B} of length n with no adjacent inverse pair.
std::set<std::string> brute_reduced(std::size_t n) {
  std::set<std::string> out{""};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<std::string> next;
    for (const auto& s : out)
      for (char c : std::string("aAbB")) {
        if (!s.empty() && s.back() != c && std::tolower(s.back()) == std::tolower(c)) continue;
        next.insert(s + c);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce("aA").empty());
  CHECK(free_reduce("baAB").empty());
  CHECK(free_reduce("abBa").to_string() == "aa");
  CHECK(Word::parse("AaabBBbA").to_string() == "");
  CHECK(Word::parse("bbb").to_string() == "bbb");
  CHECK_THROWS_AS(Word::parse("abc"), PreconditionError);
}

TEST_CASE("commutator and conjugate conventions") {
  const Word a = Word::parse("a"), b = Word::parse("b");
  CHECK(commutator(b, a).to_string() == "BAba");
  CHECK(conjugate(b, a).to_string() == "abA");
  CHECK(inverse(Word::parse("abAB")).to_string() == "baBA");
  CHECK(letter_power(Letter::a, -3).to_string() == "AAA");
  CHECK(concat(Word::parse("ab"), Word::parse("Ba")).to_string() == "aa");
  CHECK(commutator(b, conjugate(b, letter_power(Letter::a, 5))).size() == 4 + 4 * 5);
}

TEST_CASE("enumeration is complete and ordered") {
  CHECK(reduced_count(0) == 1);
  CHECK(reduced_count(3) == 36);
  const auto words = enumerate_reduced(6);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= 6; ++k) total += reduced_count(k);
  CHECK(words.size() == total);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < words.size(); ++i) {
    seen.insert(words[i].to_string());
    if (i > 0) CHECK(words[i - 1].size() <= words[i].size());
  }
  CHECK(seen.size() == words.size());
  for (std::size_t k = 0; k <= 6; ++k)
    for (const auto& s : brute_reduced(k)) CHECK(seen.count(s) == 1);
  CHECK(words[1].to_string() == "a");
  CHECK(words[2].to_string() == "A");
  CHECK(words[5].to_string() == "aa");
}

TEST_CASE("stream restarts deliver the same sequence") {
  ReducedWordStream s1(4), s2(4);
  std::size_t n = 0;
  while (auto w = s1.next()) {
    auto v = s2.next();
    REQUIRE(v);
    CHECK(*w == *v);
    ++n;
  }
  CHECK(n == 161);
}

TEST_CASE("random words are reduced and reproducible") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Word w = random_reduced(40, seed);
    CHECK(w.size() == 40);
    CHECK(free_reduce(w.letters()) == w);
    CHECK(random_reduced(40, seed) == w);
  }
  CHECK(random_reduced(30, 1) != random_reduced(30, 2));
}
