#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pcw/word.hpp"
#include "test_helpers.hpp"

using namespace pcw;
using pcw::testing::random_text;
using pcw::testing::ternary;

TEST_CASE("alphabet construction and ranks") {
  const OrderedAlphabet abc("abc");
  CHECK(abc.size() == 3);
  CHECK(abc.rank_of('a') == 0);
  CHECK(abc.rank_of('c') == 2);
  CHECK(abc.rank_of('z') == -1);
  CHECK(abc.symbol_at(1) == 'b');
  CHECK_THROWS_AS(OrderedAlphabet("aba"), std::invalid_argument);
  CHECK_THROWS_AS(OrderedAlphabet(""), std::invalid_argument);
}

TEST_CASE("word validates letters against its alphabet") {
  CHECK_NOTHROW(ternary("abacabc"));
  CHECK_NOTHROW(ternary(""));
  CHECK_THROWS_AS(ternary("abd"), std::invalid_argument);
}

TEST_CASE("lexicographic order follows rank, not character codes") {
  const auto reversed = make_alphabet("cba");
  const Word ca("ca", reversed);
  const Word cb("cb", reversed);
  CHECK(lex_less(cb, ca));  // b ranks before a here
  CHECK_FALSE(lex_less(ca, cb));

  CHECK(lex_less(ternary("ab"), ternary("b")));
  CHECK(lex_less(ternary("ab"), ternary("aba")));  // proper prefix is smaller
}

TEST_CASE("reverse") {
  CHECK(reverse(ternary("abc")).text() == "cba");
  CHECK(reverse(ternary("")).text() == "");
  CHECK(reverse(ternary("ababaababa")).text() == "ababaababa");

  std::mt19937 rng(11u);
  for (int i = 0; i < 200; ++i) {
    const Word w = ternary(random_text(rng, 0, 24));
    CHECK(reverse(reverse(w)) == w);
  }
}

TEST_CASE("is_palindrome") {
  CHECK(is_palindrome(ternary("bcb")));
  CHECK_FALSE(is_palindrome(ternary("cbccbbc")));
  CHECK(is_palindrome(ternary("")));
}

TEST_CASE("parikh") {
  const auto v = parikh(ternary("acbcbbcbc"));
  CHECK(v.counts.at('a') == 1);
  CHECK(v.counts.at('b') == 4);
  CHECK(v.counts.at('c') == 4);

  const auto empty = parikh(ternary(""));
  CHECK(empty.counts == std::map<char, long long>{{'a', 0}, {'b', 0}, {'c', 0}});

  const auto abac = parikh(ternary("abac"));
  CHECK(abac.counts == std::map<char, long long>{{'a', 2}, {'b', 1}, {'c', 1}});

  std::mt19937 rng(12u);
  for (int i = 0; i < 200; ++i) {
    const Word w = ternary(random_text(rng, 0, 24));
    CHECK(parikh(reverse(w)) == parikh(w));
    long long total = 0;
    for (const auto& [symbol, count] : parikh(w).counts) total += count;
    CHECK(total == static_cast<long long>(w.size()));
    for (const Word& conj : conjugates(w)) {
      CHECK(parikh(conj) == parikh(w));
    }
  }
}

TEST_CASE("alph") {
  CHECK(alph(ternary("abac")) == std::set<char>{'a', 'b', 'c'});
  CHECK(alph(ternary("bb")) == std::set<char>{'b'});
  CHECK(alph(ternary("")).empty());
}

TEST_CASE("factors_k") {
  const auto f2 = factors_k(ternary("abcbb"), 2);
  std::set<std::string> texts;
  for (const Word& f : f2) texts.insert(f.text());
  CHECK(texts == std::set<std::string>{"ab", "bc", "cb", "bb"});

  const auto g2 = factors_k(ternary("acbcbbcbc"), 2);
  texts.clear();
  for (const Word& f : g2) texts.insert(f.text());
  CHECK(texts == std::set<std::string>{"ac", "cb", "bc", "bb"});

  CHECK(factors_k(ternary("ab"), 3).empty());
  const auto f0 = factors_k(ternary("ab"), 0);
  CHECK(f0.size() == 1);
  CHECK(f0.begin()->empty());

  std::mt19937 rng(13u);
  for (int i = 0; i < 100; ++i) {
    const Word w = ternary(random_text(rng, 1, 24));
    CHECK(factors_k(w, 1).size() == alph(w).size());
  }
}

TEST_CASE("is_primitive") {
  CHECK_FALSE(is_primitive(ternary("abab")));
  CHECK(is_primitive(ternary("abac")));
  CHECK(is_primitive(ternary("a")));
  CHECK_FALSE(is_primitive(ternary("aaa")));
  CHECK_THROWS_AS(is_primitive(ternary("")), std::invalid_argument);
}

TEST_CASE("conjugates") {
  std::vector<std::string> texts;
  for (const Word& c : conjugates(ternary("abac"))) texts.push_back(c.text());
  CHECK(texts == std::vector<std::string>{"abac", "baca", "acab", "caba"});

  texts.clear();
  for (const Word& c : conjugates(ternary("aa"))) texts.push_back(c.text());
  CHECK(texts == std::vector<std::string>{"aa", "aa"});

  CHECK(conjugates(ternary("a")).size() == 1);

  // A primitive word has |w| pairwise distinct conjugates.
  std::mt19937 rng(14u);
  for (int i = 0; i < 100; ++i) {
    const Word w = ternary(random_text(rng, 1, 16));
    if (!is_primitive(w)) continue;
    std::set<std::string> distinct;
    for (const Word& c : conjugates(w)) distinct.insert(c.text());
    CHECK(distinct.size() == w.size());
  }
}

TEST_CASE("is_lyndon") {
  CHECK(is_lyndon(ternary("abac")));
  CHECK_FALSE(is_lyndon(ternary("baca")));
  CHECK_FALSE(is_lyndon(ternary("aa")));
  CHECK(is_lyndon(ternary("a")));
  CHECK_THROWS_AS(is_lyndon(ternary("")), std::invalid_argument);

  std::mt19937 rng(15u);
  for (int i = 0; i < 300; ++i) {
    const Word w = ternary(random_text(rng, 1, 14));
    if (is_lyndon(w)) CHECK(is_primitive(w));
  }
}

TEST_CASE("lyndon_conjugate") {
  CHECK(lyndon_conjugate(ternary("baca")).text() == "abac");
  CHECK(lyndon_conjugate(ternary("abac")).text() == "abac");
  CHECK(lyndon_conjugate(ternary("cba")).text() == "acb");
  CHECK_THROWS_AS(lyndon_conjugate(ternary("abab")), std::invalid_argument);
  CHECK_THROWS_AS(lyndon_conjugate(ternary("")), std::invalid_argument);

  std::mt19937 rng(16u);
  for (int i = 0; i < 200; ++i) {
    const Word w = ternary(random_text(rng, 1, 14));
    if (!is_primitive(w)) continue;
    const Word canonical = lyndon_conjugate(w);
    CHECK(is_lyndon(canonical));
    CHECK(lyndon_conjugate(canonical) == canonical);
    for (const Word& c : conjugates(w)) {
      CHECK(lyndon_conjugate(c) == canonical);
    }
  }
}
