#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "conjtrace/words.hpp"

using namespace conjtrace;

namespace {

Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }

// Rotation-comparison conjugacy oracle, independent of cyclic_canonical.
std::vector<int> strip_cyclic(const Word& w) {
  std::vector<int> c = w.letters();
  while (c.size() >= 2 && c.front() == -c.back()) {
    c.erase(c.begin());
    c.pop_back();
  }
  return c;
}

bool conjugate_by_rotations(const Word& u, const Word& v) {
  std::vector<int> a = strip_cyclic(u), b = strip_cyclic(v);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    bool eq = true;
    for (std::size_t i = 0; i < a.size() && eq; ++i)
      if (a[(i + k) % a.size()] != b[i]) eq = false;
    if (eq) return true;
  }
  return false;
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::vector<int> ls;
  for (int i = 0; i < len; ++i) {
    int g = static_cast<int>(rng() % static_cast<unsigned>(rank)) + 1;
    int l = (rng() & 1) ? g : -g;
    ls.push_back(l);
  }
  return Word(rank, ls);
}

long necklace_count(int n, int k) {
  // Burnside: (1/n) sum over d|n of phi(d) k^{n/d}
  auto phi = [](int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        while (m % p == 0) m /= p;
        r -= r / p;
      }
    if (m > 1) r -= r / m;
    return r;
  };
  long total = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long pw = 1;
      for (int i = 0; i < n / d; ++i) pw *= k;
      total += phi(d) * pw;
    }
  return total / n;
}

}  // namespace

TEST_CASE("parse and format") {
  CHECK(W("abA").letters() == std::vector<int>{1, 2, -1});
  CHECK(W("abB").letters() == std::vector<int>{1});
  CHECK_THROWS_AS(parse_word("c", 2), Error);
  try {
    parse_word("c", 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidLetter);
  }
  CHECK_THROWS_AS(parse_word("a b", 2), Error);
  CHECK(parse_word("", 2).is_identity());
  CHECK(format_word(W("aBab")) == "aBab");
  CHECK(format_word(Word(2)) == "");
}

TEST_CASE("multiply and invert") {
  CHECK(multiply(W("ab"), W("B")) == W("a"));
  CHECK(multiply(W("a"), W("A")).is_identity());
  CHECK(multiply(W("ab"), W("ab")) == W("abab"));
  CHECK_THROWS_AS(multiply(W("a"), parse_word("a", 3)), Error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = random_word(rng, 2, static_cast<int>(rng() % 12));
    CHECK(multiply(w, invert(w)).is_identity());
    // reduction is idempotent: re-building from letters changes nothing
    CHECK(Word(w.rank(), w.letters()) == w);
  }
  // associativity on random triples
  for (int i = 0; i < 100; ++i) {
    Word a = random_word(rng, 2, 6), b = random_word(rng, 2, 6),
         c = random_word(rng, 2, 6);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("cyclic canonical forms") {
  auto cf = cyclic_canonical(W("Bab"));
  CHECK(cf.cls.core == W("a"));
  CHECK(cf.conjugator == W("B"));

  CHECK(cyclic_canonical(W("babbaa")).cls.core == W("aababb"));
  CHECK(cyclic_canonical(W("abaabb")).cls.core == W("aabbab"));
  CHECK(cyclic_canonical(Word(2)).cls.core.is_identity());
  CHECK(cyclic_canonical(W("babbaa")).cls.class_norm == 6);

  // conjugator certificate: c core c^-1 reduces exactly to w
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 2, static_cast<int>(rng() % 10));
    auto c = cyclic_canonical(w);
    CHECK(conjugate(c.conjugator, c.cls.core) == w);
    CHECK(is_cyclically_reduced(c.cls.core));
  }
}

TEST_CASE("conjugacy") {
  CHECK(are_conjugate(W("ab"), W("ba")));
  CHECK_FALSE(are_conjugate(W("babbaa"), W("abaabb")));
  CHECK_FALSE(are_conjugate(W("a"), W("A")));

  // agrees with rotation comparison for all words of length <= 8 would be
  // huge; sample randomly instead plus full sweep at length <= 4.
  for (int len = 0; len <= 4; ++len) {
    auto ws = enumerate_words_vec(2, len, false, false);
    for (const auto& u : ws)
      for (const auto& v : ws)
        CHECK(are_conjugate(u, v) == conjugate_by_rotations(u, v));
  }
  std::mt19937_64 rng(13);
  std::vector<Word> sample;
  for (int i = 0; i < 60; ++i)
    sample.push_back(random_word(rng, 2, static_cast<int>(rng() % 9)));
  for (const auto& u : sample)
    for (const auto& v : sample)
      CHECK(are_conjugate(u, v) == conjugate_by_rotations(u, v));
  // equivalence relation on the sample
  for (const auto& u : sample) CHECK(are_conjugate(u, u));
  for (const auto& u : sample)
    for (const auto& v : sample)
      CHECK(are_conjugate(u, v) == are_conjugate(v, u));
}

TEST_CASE("word stats") {
  auto st = word_stats(W("abaabb"));
  CHECK(st.reverse == W("bbaaba"));
  CHECK(st.is_positive);
  CHECK(st.signature == std::vector<long>{3, 3});

  auto st2 = word_stats(W("aB"));
  CHECK(st2.reverse == W("Ba"));
  CHECK_FALSE(st2.is_positive);
  CHECK(st2.signature == std::vector<long>{1, -1});

  auto st3 = word_stats(Word(2));
  CHECK(st3.reverse.is_identity());
  CHECK(st3.is_positive);
  CHECK(st3.signature == std::vector<long>{0, 0});
}

TEST_CASE("enumeration") {
  CHECK(enumerate_words_vec(2, 2, false, false).size() == 12);
  CHECK(enumerate_words_vec(2, 6, true, false).size() == 64);
  CHECK(enumerate_words_vec(2, 6, true, true).size() ==
        static_cast<std::size_t>(necklace_count(6, 2)));

  // closed form 2r(2r-1)^{n-1}
  for (int r = 2; r <= 3; ++r) {
    long expect = 2 * r;
    for (int n = 1; n <= 4; ++n) {
      CHECK(enumerate_words_vec(r, n, false, false).size() ==
            static_cast<std::size_t>(expect));
      expect *= 2 * r - 1;
    }
  }

  // deterministic lexicographic order, all reduced, classes canonical
  auto ws = enumerate_words_vec(2, 3, false, false);
  for (std::size_t i = 0; i + 1 < ws.size(); ++i)
    CHECK(word_less(ws[i], ws[i + 1]));
  auto cs = enumerate_words_vec(2, 6, false, true);
  std::set<std::string> seen;
  for (const auto& c : cs) {
    CHECK(cyclic_canonical(c).cls.core == c);
    CHECK(seen.insert(format_word(c)).second);
  }
}

TEST_CASE("cyclic roots") {
  CHECK(cyclic_root(W("abab")).root == W("ab"));
  CHECK(cyclic_root(W("abab")).exponent == 2);
  CHECK(cyclic_root(W("aaa")).exponent == 3);
  CHECK(cyclic_root(W("aab")).exponent == 1);
  CHECK(cyclic_root(Word(2)).exponent == 1);
}
