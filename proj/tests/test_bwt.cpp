#include <doctest.h>

#include <random>
#include <stdexcept>

#include "pcw/bwt.hpp"
#include "test_helpers.hpp"

using namespace pcw;
using pcw::testing::bwt_oracle;
using pcw::testing::random_text;
using pcw::testing::ternary;

namespace {

const AlphabetRef& english() {
  static const AlphabetRef instance = make_alphabet("abcdefghijklmnopqrstuvwxyz");
  return instance;
}

}  // namespace

TEST_CASE("bwt fixtures") {
  CHECK(bwt(Word("apartment", english())).text() == "tpmteaanr");
  CHECK(bwt(Word("aluminium", english())).text() == "mmnauuiil");
  CHECK(bwt(ternary("abc")).text() == "cab");
  CHECK_THROWS_AS(bwt(ternary("")), std::invalid_argument);
}

TEST_CASE("bwt agrees with the rotation-sort oracle") {
  std::mt19937 rng(21u);
  for (int i = 0; i < 400; ++i) {
    const Word w = ternary(random_text(rng, 1, 24));
    CHECK(bwt(w).text() == bwt_oracle(w));
  }
  for (int i = 0; i < 100; ++i) {
    const Word w = Word(random_text(rng, 1, 16, "nopqr"), english());
    CHECK(bwt(w).text() == bwt_oracle(w));
  }
}

TEST_CASE("bwt permutes the letters and is conjugation invariant") {
  std::mt19937 rng(22u);
  for (int i = 0; i < 300; ++i) {
    const Word w = ternary(random_text(rng, 1, 20));
    CHECK(parikh(bwt(w)) == parikh(w));
    std::uniform_int_distribution<std::size_t> cut_dist(0, w.size());
    const std::size_t cut = cut_dist(rng);
    const Word rotated = w.with_text(w.text().substr(cut) + w.text().substr(0, cut));
    CHECK(bwt(rotated) == bwt(w));
  }
}

TEST_CASE("clustering_report fixtures") {
  const auto aluminium = clustering_report(Word("aluminium", english()));
  REQUIRE(aluminium.permutation.has_value());
  CHECK(*aluminium.permutation == std::vector<int>{4, 5, 1, 6, 2, 3});
  CHECK_FALSE(aluminium.perfect);

  const auto clustered = clustering_report(ternary("acbcbbcbc"));
  CHECK(clustered.bwt.text() == "ccccbbbba");
  CHECK(clustered.runs ==
        std::vector<std::pair<char, std::size_t>>{{'c', 4}, {'b', 4}, {'a', 1}});
  CHECK(clustered.perfect);
  REQUIRE(clustered.permutation.has_value());
  CHECK(*clustered.permutation == std::vector<int>{3, 2, 1});

  const auto abc = clustering_report(ternary("abc"));
  CHECK(abc.bwt.text() == "cab");
  CHECK(abc.runs == std::vector<std::pair<char, std::size_t>>{{'c', 1}, {'a', 1}, {'b', 1}});
  REQUIRE(abc.permutation.has_value());
  CHECK(*abc.permutation == std::vector<int>{3, 1, 2});
  CHECK_FALSE(abc.perfect);
}

TEST_CASE("clustering_report permutation presence") {
  // Two b-clusters: no permutation.
  const auto report = clustering_report(ternary("abcb"));
  const std::size_t distinct = alph(ternary("abcb")).size();
  CHECK(report.runs.size() != distinct);
  CHECK_FALSE(report.permutation.has_value());

  std::mt19937 rng(23u);
  for (int i = 0; i < 200; ++i) {
    const Word w = ternary(random_text(rng, 1, 16));
    const auto r = clustering_report(w);
    std::string flattened;
    for (const auto& [symbol, length] : r.runs) flattened.append(length, symbol);
    CHECK(flattened == r.bwt.text());
    CHECK(r.permutation.has_value() == (r.runs.size() == alph(w).size()));
    if (r.perfect) {
      REQUIRE(r.permutation.has_value());
      // Perfect clustering lists the clusters in strictly decreasing rank.
      for (std::size_t k = 1; k < r.permutation->size(); ++k) {
        CHECK((*r.permutation)[k - 1] > (*r.permutation)[k]);
      }
    }
  }
}

TEST_CASE("is_perfectly_clustering") {
  CHECK(is_perfectly_clustering(ternary("acbcbbcbc")));
  CHECK_FALSE(is_perfectly_clustering(ternary("abc")));
  CHECK(is_perfectly_clustering(ternary("aab")));
  CHECK_THROWS_AS(is_perfectly_clustering(ternary("")), std::invalid_argument);

  std::mt19937 rng(24u);
  for (int i = 0; i < 300; ++i) {
    const Word w = ternary(random_text(rng, 1, 18));
    CHECK(is_perfectly_clustering(w) == pcw::testing::perfectly_clustering_oracle(w));
  }
}

TEST_CASE("conjugates of a primitive perfectly clustering word are perfectly clustering") {
  for (const char* text : {"acbcbbcbc", "acacbc", "acbcacc", "abacabbac", "abac"}) {
    const Word w = ternary(text);
    REQUIRE(is_perfectly_clustering(w));
    for (const Word& c : conjugates(w)) {
      CHECK(is_perfectly_clustering(c));
    }
  }
}
