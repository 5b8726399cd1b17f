#pragma once

// Burrows-Wheeler transform by rotation sorting, plus run/cluster analysis.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pcw/word.hpp"

namespace pcw {

struct ClusteringReport {
  Word bwt;
  // Maximal runs of the transform, in order of appearance.
  std::vector<std::pair<char, std::size_t>> runs;
  // Present iff every letter forms exactly one cluster: 1-based ranks within
  // the sorted alphabet of w, one entry per run, e.g. 4,5,1,6,2,3.
  std::optional<std::vector<int>> permutation;
  bool perfect = false;
};

// Final letters of the lexicographically sorted rotation multiset. Rotations
// are kept with multiplicity; ties break by rotation index, which cannot
// change the output. Throws on the empty word.
Word bwt(const Word& w);

ClusteringReport clustering_report(const Word& w);

// True iff bwt(w) lists the letters of w in nonincreasing alphabet order.
bool is_perfectly_clustering(const Word& w);

}  // namespace pcw
