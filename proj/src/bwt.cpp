#include "pcw/bwt.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pcw {

namespace {

// Rank-mapped doubled text: rotation i of w is bytes [i, i+n) and byte
// comparison agrees with rank order.
std::string rank_doubled(const Word& w) {
  const OrderedAlphabet& alpha = *w.alphabet();
  const std::size_t n = w.size();
  std::string d(2 * n, '\0');
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = d[i + n] = static_cast<char>(alpha.rank_of(w.at(i)));
  }
  return d;
}

std::vector<std::size_t> sorted_rotation_starts(const Word& w) {
  const std::size_t n = w.size();
  const std::string d = rank_doubled(w);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    const int c = std::memcmp(d.data() + i, d.data() + j, n);
    return c != 0 ? c < 0 : i < j;
  });
  return idx;
}

}  // namespace

Word bwt(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) {
    throw std::invalid_argument("bwt is undefined for the empty word");
  }
  std::string last(n, '\0');
  const auto idx = sorted_rotation_starts(w);
  for (std::size_t k = 0; k < n; ++k) {
    last[k] = w.at((idx[k] + n - 1) % n);
  }
  return w.with_text(std::move(last));
}

ClusteringReport clustering_report(const Word& w) {
  Word transform = bwt(w);
  ClusteringReport report{transform, {}, std::nullopt, false};

  for (char c : transform.text()) {
    if (!report.runs.empty() && report.runs.back().first == c) {
      ++report.runs.back().second;
    } else {
      report.runs.emplace_back(c, 1);
    }
  }

  const OrderedAlphabet& alpha = *w.alphabet();
  const std::set<char> letter_set = alph(w);
  std::vector<char> letters(letter_set.begin(), letter_set.end());
  std::sort(letters.begin(), letters.end(),
            [&](char x, char y) { return alpha.rank_of(x) < alpha.rank_of(y); });

  if (report.runs.size() == letters.size()) {
    std::vector<int> perm;
    perm.reserve(report.runs.size());
    for (const auto& [symbol, len] : report.runs) {
      const auto pos = std::find(letters.begin(), letters.end(), symbol) - letters.begin();
      perm.push_back(static_cast<int>(pos) + 1);
    }
    report.permutation = std::move(perm);
  }

  report.perfect = is_perfectly_clustering(w);
  return report;
}

bool is_perfectly_clustering(const Word& w) {
  const OrderedAlphabet& alpha = *w.alphabet();
  std::string decreasing = w.text();
  std::sort(decreasing.begin(), decreasing.end(),
            [&](char x, char y) { return alpha.rank_of(x) > alpha.rank_of(y); });
  return bwt(w).text() == decreasing;
}

}  // namespace pcw
