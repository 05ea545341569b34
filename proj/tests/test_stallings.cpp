#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "conjtrace/stallings.hpp"

using namespace conjtrace;

namespace {
Word W(const std::string& s, int rank = 2) { return parse_word(s, rank); }
}

TEST_CASE("single generator gives the whole group") {
  HallCover hc = hall_completion(W("a"), 2);
  CHECK(hc.graph.vertex_count == 1);
  CHECK(hc.cosets.index == 1);
  REQUIRE(hc.cosets.basis.size() == 2);
  CHECK(hc.cosets.basis[0] == W("a"));
  CHECK(hc.cosets.basis[1] == W("b"));
  CHECK(hc.conjugator.is_identity());
}

TEST_CASE("square of a generator") {
  HallCover hc = hall_completion(W("aa"), 2);
  CHECK(hc.graph.vertex_count == 2);
  REQUIRE(hc.cosets.basis.size() == 3);
  CHECK(hc.cosets.basis[0] == W("aa"));
  // completion adds the b edges as two loops
  CHECK(hc.graph.target(2, 0) == 0);
  CHECK(hc.graph.target(2, 1) == 1);
  std::set<std::string> basis_words;
  for (const auto& b : hc.cosets.basis) basis_words.insert(format_word(b));
  CHECK(basis_words == std::set<std::string>{"aa", "b", "abA"});
  // sigma_a is the transposition, sigma_b the identity
  CHECK(hc.cosets.action[0] == std::vector<int>{1, 0});
  CHECK(hc.cosets.action[1] == std::vector<int>{0, 1});
}

TEST_CASE("two letter cycle") {
  HallCover hc = hall_completion(W("ab"), 2);
  CHECK(hc.graph.vertex_count == 2);
  CHECK(hc.cosets.action[0] == std::vector<int>{1, 0});
  CHECK(hc.cosets.action[1] == std::vector<int>{1, 0});
  CHECK_FALSE(membership(W("a"), hc.graph).has_value());
  std::set<std::string> basis_words;
  for (const auto& b : hc.cosets.basis) basis_words.insert(format_word(b));
  CHECK(basis_words == std::set<std::string>{"ab", "aa", "bA"});
  CHECK(hc.cosets.basis[0] == W("ab"));
  CHECK(hc.cosets.reps[0].is_identity());
  CHECK(hc.cosets.reps[1] == W("a"));
}

TEST_CASE("membership and rewriting") {
  HallCover hc = hall_completion(W("aa"), 2);
  auto bw = membership(W("aa"), hc.graph);
  REQUIRE(bw.has_value());
  CHECK(*bw == BasisWord{1});
  CHECK(membership(Word(2), hc.graph).has_value());
  CHECK(membership(Word(2), hc.graph)->empty());
  CHECK_FALSE(membership(W("a"), hc.graph).has_value());

  // round trip: every basis element rewrites to itself
  for (std::size_t i = 0; i < hc.cosets.basis.size(); ++i) {
    auto r = membership(hc.cosets.basis[i], hc.graph);
    REQUIRE(r.has_value());
    CHECK(*r == BasisWord{static_cast<int>(i) + 1});
  }
  // membership result expands back to the input word
  auto r2 = membership(W("aabAAba"), hc.graph);
  if (r2) CHECK(hc.cosets.expand(*r2) == W("aabAAba"));
}

TEST_CASE("structural invariants across many cores") {
  for (const char* s :
       {"a", "b", "A", "aa", "ab", "aB", "Ab", "aab", "abb", "aabb", "abAB",
        "aabab", "aababb", "BBa", "aaaa", "abaB"}) {
    Word gamma = W(s);
    HallCover hc = hall_completion(gamma, 2);
    const auto& cs = hc.cosets;
    Word core = cyclic_canonical(gamma).cls.core;
    // Patel-style bound and index certificate
    CHECK(cs.index <= std::max(1, gamma.length()));
    CHECK(cs.index == hc.graph.vertex_count);
    CHECK(static_cast<int>(cs.reps.size()) == cs.index);
    // Nielsen-Schreier rank
    CHECK(static_cast<int>(cs.basis.size()) == cs.index * (2 - 1) + 1);
    // core is basis element 1 and crosses the marked edge exactly once
    CHECK(cs.basis[0] == core);
    auto bw = membership(core, hc.graph);
    REQUIRE(bw.has_value());
    CHECK(*bw == BasisWord{1});
    // conjugator translates statements about the core back to gamma
    CHECK(conjugate(hc.conjugator, core) == gamma);
    // every basis element is a member and rewrites to itself
    for (std::size_t i = 0; i < cs.basis.size(); ++i) {
      auto r = membership(cs.basis[i], hc.graph);
      REQUIRE(r.has_value());
      CHECK(*r == BasisWord{static_cast<int>(i) + 1});
    }
  }
}

TEST_CASE("negative core letters orient the marked edge") {
  HallCover hc = hall_completion(W("A"), 2);
  CHECK(hc.cosets.basis[0] == W("A"));
  auto bw = membership(W("A"), hc.graph);
  REQUIRE(bw.has_value());
  CHECK(*bw == BasisWord{1});
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(hall_completion(Word(2), 2), Error);
  try {
    hall_completion(Word(2), 2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TrivialElement);
  }
}

TEST_CASE("graph serialization round trip") {
  HallCover hc = hall_completion(W("aab"), 2);
  std::string text = hc.graph.to_text();
  SubgroupGraph g2 = SubgroupGraph::from_text(text);
  CHECK(g2.to_text() == text);
  CosetStructure cs2 = coset_structure(g2);
  CHECK(cs2.index == hc.cosets.index);
  CHECK(cs2.basis == hc.cosets.basis);

  // corrupt: duplicate permutation target is not a cover
  std::string bad = text;
  auto pos = bad.find("perm 1");
  auto eol = bad.find('\n', pos);
  bad.replace(pos, eol - pos, "perm 1 0 0 0");
  CHECK_THROWS_AS(coset_structure(SubgroupGraph::from_text(bad)), Error);
}

TEST_CASE("one vertex coset structure") {
  HallCover hc = hall_completion(W("b"), 2);
  CHECK(hc.cosets.index == 1);
  // alpha_{1,x} = x for every generator (as basis letters)
  for (int g = 1; g <= 2; ++g) {
    Word expanded = hc.cosets.expand(hc.cosets.schreier[g - 1][0]);
    CHECK(expanded == Word(2, {g}));
  }
}
