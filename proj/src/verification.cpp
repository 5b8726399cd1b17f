#include "pcw/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <numeric>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcw/bwt.hpp"
#include "pcw/morphisms.hpp"
#include "pcw/palindrome.hpp"

namespace pcw {

namespace {

constexpr char kLetters[3] = {'a', 'b', 'c'};

int letter_index(char c) { return c - 'a'; }

bool has_full_alphabet(const std::string& w) {
  bool seen[3] = {false, false, false};
  for (char c : w) seen[letter_index(c)] = true;
  return seen[0] && seen[1] && seen[2];
}

// w strictly minimal among its rotations (hence primitive). Plain byte
// comparison is rank comparison over the fixed a<b<c alphabet.
bool ternary_lyndon(const std::string& w) {
  const std::size_t n = w.size();
  const std::string d = w + w;
  for (std::size_t i = 1; i < n; ++i) {
    if (std::memcmp(d.data() + i, w.data(), n) <= 0) return false;
  }
  return true;
}

bool ternary_perfectly_clustering(const std::string& w) {
  const std::size_t n = w.size();
  const std::string d = w + w;
  std::vector<std::uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t i, std::uint32_t j) {
    const int c = std::memcmp(d.data() + i, d.data() + j, n);
    return c != 0 ? c < 0 : i < j;
  });
  std::size_t count[3] = {0, 0, 0};
  for (char c : w) ++count[letter_index(c)];
  std::size_t k = 0;
  for (int letter = 2; letter >= 0; --letter) {
    for (std::size_t r = 0; r < count[letter]; ++r, ++k) {
      if (d[idx[k] + n - 1] != kLetters[letter]) return false;
    }
  }
  return true;
}

bool catalog_test(const std::string& w) {
  return w.size() >= 3 && has_full_alphabet(w) && ternary_lyndon(w) &&
         ternary_perfectly_clustering(w);
}

// compat masks: bit s set iff Lemma1 set s still contains every adjacent
// pair seen so far.
struct PairMasks {
  std::uint8_t mask[3][3];

  PairMasks() {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        std::uint8_t m = 0;
        const std::string pair{kLetters[i], kLetters[j]};
        int bit = 0;
        for (Lemma1Set s : {Lemma1Set::S1, Lemma1Set::S2, Lemma1Set::S3, Lemma1Set::S4}) {
          if (lemma1_factors(s).count(pair)) m |= static_cast<std::uint8_t>(1u << bit);
          ++bit;
        }
        mask[i][j] = m;
      }
    }
  }
};

std::uint8_t pair_mask(char prev, char next) {
  static const PairMasks table;
  return table.mask[letter_index(prev)][letter_index(next)];
}

void dfs_collect(std::string& w, std::uint8_t compat, int bound, bool test_root,
                 std::vector<std::string>& hits) {
  if (test_root && catalog_test(w)) hits.push_back(w);
  if (static_cast<int>(w.size()) >= bound) return;
  for (char c : kLetters) {
    const std::uint8_t next = compat & pair_mask(w.back(), c);
    if (!next) continue;
    w.push_back(c);
    dfs_collect(w, next, bound, true, hits);
    w.pop_back();
  }
}

void dfs_frontier(std::string& w, std::uint8_t compat, int depth, int bound,
                  std::vector<std::string>& hits,
                  std::vector<std::pair<std::string, std::uint8_t>>& frontier) {
  if (catalog_test(w)) hits.push_back(w);
  if (static_cast<int>(w.size()) >= bound) return;
  if (static_cast<int>(w.size()) == depth) {
    frontier.emplace_back(w, compat);
    return;
  }
  for (char c : kLetters) {
    const std::uint8_t next = compat & pair_mask(w.back(), c);
    if (!next) continue;
    w.push_back(c);
    dfs_frontier(w, next, depth, bound, hits, frontier);
    w.pop_back();
  }
}

void sort_canonical(std::vector<std::string>& words) {
  std::sort(words.begin(), words.end(), [](const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

PclCatalog assemble_catalog(int bound, std::vector<std::string> words) {
  sort_canonical(words);
  PclCatalog catalog;
  catalog.bound = bound;
  catalog.entries.reserve(words.size());
  for (std::string& text : words) {
    Word w(std::move(text), ternary_alphabet());
    auto factorization = palindromic_special_factorization(w);
    if (!factorization) {
      throw std::logic_error("catalog word " + w.text() +
                             " has no palindromic special factorization");
    }
    catalog.entries.push_back(CatalogEntry{std::move(w), std::move(*factorization)});
  }
  return catalog;
}

void require_bound(int bound) {
  if (bound < 3) {
    throw std::invalid_argument("enumeration bound must be at least 3");
  }
}

#ifdef _OPENMP
PclCatalog enumerate_pcl_parallel(int bound, int workers) {
  constexpr int kFrontierDepth = 6;
  if (bound <= kFrontierDepth) return enumerate_pcl_serial(bound);

  std::vector<std::string> hits;
  std::vector<std::pair<std::string, std::uint8_t>> frontier;
  std::string root = "a";
  dfs_frontier(root, 0xF, kFrontierDepth, bound, hits, frontier);

  const int threads = workers > 0 ? workers : omp_get_max_threads();
  std::vector<std::vector<std::string>> partial(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    std::string w = frontier[i].first;
    dfs_collect(w, frontier[i].second, bound, false, partial[i]);
  }
  for (auto& p : partial) {
    hits.insert(hits.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return assemble_catalog(bound, std::move(hits));
}
#endif

}  // namespace

PclCatalog enumerate_pcl_serial(int bound) {
  require_bound(bound);
  std::vector<std::string> hits;
  std::string root = "a";
  dfs_collect(root, 0xF, bound, true, hits);
  return assemble_catalog(bound, std::move(hits));
}

PclCatalog enumerate_pcl(int bound, int workers) {
  require_bound(bound);
#ifdef _OPENMP
  if (workers != 1) return enumerate_pcl_parallel(bound, workers);
#endif
  (void)workers;
  return enumerate_pcl_serial(bound);
}

PclCatalog enumerate_pcl_unpruned(int bound) {
  require_bound(bound);
  std::vector<std::string> hits;
  for (int len = 3; len <= bound; ++len) {
    std::string w(static_cast<std::size_t>(len), 'a');
    while (true) {
      if (catalog_test(w)) hits.push_back(w);
      int pos = len - 1;
      while (pos >= 0 && w[pos] == 'c') {
        w[pos] = 'a';
        --pos;
      }
      if (pos < 0) break;
      ++w[pos];
    }
  }
  return assemble_catalog(bound, std::move(hits));
}

std::string to_string(PalindromeSide side) {
  return side == PalindromeSide::P1 ? "P1" : "P2";
}

std::pair<PalindromeSetSlice, PalindromeSetSlice> compute_sets(const PclCatalog& catalog) {
  PalindromeSetSlice p1{PalindromeSide::P1, catalog.bound, {}};
  PalindromeSetSlice p2{PalindromeSide::P2, catalog.bound, {}};
  // Entries are in length-then-lex order, so the first witness seen is the
  // shortest, ties broken lexicographically.
  for (const CatalogEntry& entry : catalog.entries) {
    p1.elements.emplace(entry.factorization.parts[0], entry.word);
    p2.elements.emplace(entry.factorization.parts[1], entry.word);
  }
  return {std::move(p1), std::move(p2)};
}

std::string to_string(MembershipStatus status) {
  switch (status) {
    case MembershipStatus::Member: return "Member";
    case MembershipStatus::NonMemberDecisive: return "NonMemberDecisive";
    case MembershipStatus::UnknownUpTo: return "UnknownUpTo";
  }
  return "?";
}

MembershipVerdict membership(PalindromeSide side, const Word& candidate,
                             const PclCatalog& catalog) {
  for (char c : candidate.text()) {
    if (c != 'a' && c != 'b' && c != 'c') {
      throw std::invalid_argument("membership candidates live over {a,b,c}");
    }
  }
  if (!is_palindrome(candidate)) {
    throw std::invalid_argument("membership candidate must be a palindrome");
  }

  for (const CatalogEntry& entry : catalog.entries) {
    const Word& part = side == PalindromeSide::P1 ? entry.factorization.parts[0]
                                                  : entry.factorization.parts[1];
    if (part == candidate) {
      return MembershipVerdict{MembershipStatus::Member, entry.word, {}, catalog.bound};
    }
  }

  // For P2 the obstruction runs on theta(candidate): q in P2 iff theta(q)
  // in P1.
  const Word probe = side == PalindromeSide::P1 ? candidate : theta(candidate);
  if (p1_obstruction(probe)) {
    const Word framed(std::string("a") + probe.text() + "b", ternary_alphabet());
    std::vector<std::string> obstruction;
    for (const Word& f : factors_k(framed, 2)) obstruction.push_back(f.text());
    return MembershipVerdict{MembershipStatus::NonMemberDecisive, std::nullopt,
                             std::move(obstruction), catalog.bound};
  }
  return MembershipVerdict{MembershipStatus::UnknownUpTo, std::nullopt, {}, catalog.bound};
}

MembershipVerdict membership(PalindromeSide side, const Word& candidate, int bound) {
  return membership(side, candidate, enumerate_pcl(bound));
}

std::string to_string(VerificationReport::Status status) {
  switch (status) {
    case VerificationReport::Status::Pass: return "pass";
    case VerificationReport::Status::Counterexample: return "counterexample";
    case VerificationReport::Status::Unknown: return "unknown";
  }
  return "?";
}

std::optional<DirectiveLanguage> parse_language(std::string_view id) {
  if (id == "acs-abs") return DirectiveLanguage::AcsAbs;
  if (id == "acs-bcs") return DirectiveLanguage::AcsBcs;
  if (id == "acs-bs") return DirectiveLanguage::AcsBs;
  return std::nullopt;
}

bool language_membership(const Word& u, DirectiveLanguage language) {
  bool seen_b = false;
  for (char c : u.text()) {
    if (c != 'a' && c != 'b' && c != 'c') return false;
    switch (language) {
      case DirectiveLanguage::AcsAbs:
        if (c == 'b') seen_b = true;
        if (c == 'c' && seen_b) return false;
        break;
      case DirectiveLanguage::AcsBcs:
        if (c == 'b') seen_b = true;
        if (c == 'a' && seen_b) return false;
        break;
      case DirectiveLanguage::AcsBs:
        if (seen_b && c != 'b') return false;
        if (c == 'b') seen_b = true;
        break;
    }
  }
  return true;
}

void for_each_lyndon(std::string_view symbols, int max_len,
                     const std::function<void(const std::string&)>& fn) {
  if (symbols.empty() || max_len < 1) return;
  const auto successor = [&](char c) -> int {
    return static_cast<int>(symbols.find(c)) + 1;  // index of next-larger symbol
  };
  std::string w(1, symbols.front());
  while (true) {
    fn(w);
    std::string t;
    t.reserve(static_cast<std::size_t>(max_len));
    for (int i = 0; i < max_len; ++i) {
      t.push_back(w[static_cast<std::size_t>(i) % w.size()]);
    }
    while (!t.empty() && t.back() == symbols.back()) t.pop_back();
    if (t.empty()) break;
    t.back() = symbols[static_cast<std::size_t>(successor(t.back()))];
    w = std::move(t);
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Word ternary_word(const std::string& text) { return Word(text, ternary_alphabet()); }

void enumerate_directives(int max_len, const std::function<void(const Word&)>& fn) {
  std::vector<std::string> level{""};
  fn(ternary_word(""));
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    next.reserve(level.size() * 3);
    for (const std::string& u : level) {
      for (char c : kLetters) {
        next.push_back(u + c);
        fn(ternary_word(next.back()));
      }
    }
    level = std::move(next);
  }
}

void finish(VerificationReport& report, Clock::time_point start) {
  sort_canonical(report.counterexamples);
  report.counterexamples.erase(
      std::unique(report.counterexamples.begin(), report.counterexamples.end()),
      report.counterexamples.end());
  report.status = report.counterexamples.empty() ? VerificationReport::Status::Pass
                                                 : VerificationReport::Status::Counterexample;
  report.elapsed_ms = ms_since(start);
}

VerificationReport claim_lemma1(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"lemma1", bound, {}, {}, 0, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);
  for (const CatalogEntry& entry : catalog.entries) {
    for (const Word& conj : conjugates(entry.word)) {
      ++report.words_checked;
      if (lemma1_compatible(factors_k(conj, 2)).empty()) {
        report.counterexamples.push_back(conj.text());
      }
    }
  }
  finish(report, start);
  return report;
}

VerificationReport claim_prop2(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"prop2", bound, {}, {}, 2, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);
  const Word bcb = ternary_word("bcb");
  if (membership(PalindromeSide::P2, bcb, catalog).status != MembershipStatus::Member) {
    report.counterexamples.push_back("bcb not certified as a member of P2");
  }
  if (membership(PalindromeSide::P1, bcb, catalog).status !=
      MembershipStatus::NonMemberDecisive) {
    report.counterexamples.push_back("bcb not decisively excluded from P1");
  }
  finish(report, start);
  return report;
}

VerificationReport claim_lemma3(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"lemma3", bound, {}, {}, 0, 0.0};
  const auto [p1, p2] = compute_sets(enumerate_pcl(bound, workers));
  // theta maps the P2 slice onto the P1 slice, witness lengths intact;
  // sound at a fixed bound because omega preserves length.
  for (const auto& [palindrome, witness] : p2.elements) {
    ++report.words_checked;
    const auto it = p1.elements.find(theta(palindrome));
    if (it == p1.elements.end() || it->second.size() != witness.size()) {
      report.counterexamples.push_back(palindrome.text());
    }
  }
  for (const auto& [palindrome, witness] : p1.elements) {
    ++report.words_checked;
    const auto it = p2.elements.find(theta(palindrome));
    if (it == p2.elements.end() || it->second.size() != witness.size()) {
      report.counterexamples.push_back(palindrome.text());
    }
  }
  finish(report, start);
  return report;
}

constexpr int kDirectiveLen = 5;  // directive length cap for prop4/prop6/prop7

bool certified_p1_witness(const Word& directive, std::string* failure) {
  const Word w = witness_from_directive(directive);
  if (!is_pcl_via_bwt(w) || !is_pcl(w)) {
    *failure = "witness " + w.text() + " for u=" + directive.text() + " is not PCL";
    return false;
  }
  const auto f = palindromic_special_factorization(w);
  if (!f || !(f->parts[0] == pal(directive))) {
    *failure = "witness " + w.text() + " for u=" + directive.text() + " has wrong pi1";
    return false;
  }
  return true;
}

bool certified_p2_witness(const Word& directive, std::string* failure) {
  const Word w = omega(witness_from_directive(theta(directive)));
  if (!is_pcl_via_bwt(w) || !is_pcl(w)) {
    *failure = "witness " + w.text() + " for u=" + directive.text() + " is not PCL";
    return false;
  }
  const auto f = palindromic_special_factorization(w);
  if (!f || !(f->parts[1] == pal(directive))) {
    *failure = "witness " + w.text() + " for u=" + directive.text() + " has wrong pi2";
    return false;
  }
  return true;
}

VerificationReport claim_prop4(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"prop4", bound, {}, {}, 0, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);
  enumerate_directives(kDirectiveLen, [&](const Word& u) {
    ++report.words_checked;
    std::string failure;
    if (language_membership(u, DirectiveLanguage::AcsAbs)) {
      if (!certified_p1_witness(u, &failure)) report.counterexamples.push_back(failure);
    } else if (membership(PalindromeSide::P1, pal(u), catalog).status ==
               MembershipStatus::Member) {
      report.counterexamples.push_back("Pal(" + u.text() + ") is in P1 despite u outside the language");
    }
  });
  finish(report, start);
  return report;
}

VerificationReport claim_prop6(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"prop6", bound, {}, {}, 0, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);
  enumerate_directives(kDirectiveLen, [&](const Word& u) {
    ++report.words_checked;
    std::string failure;
    if (language_membership(u, DirectiveLanguage::AcsBcs)) {
      if (!certified_p2_witness(u, &failure)) report.counterexamples.push_back(failure);
    } else if (membership(PalindromeSide::P2, pal(u), catalog).status ==
               MembershipStatus::Member) {
      report.counterexamples.push_back("Pal(" + u.text() + ") is in P2 despite u outside the language");
    }
  });
  finish(report, start);
  return report;
}

VerificationReport claim_prop7(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"prop7", bound, {}, {}, 0, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);
  enumerate_directives(kDirectiveLen, [&](const Word& u) {
    ++report.words_checked;
    std::string failure;
    if (language_membership(u, DirectiveLanguage::AcsBs)) {
      if (!certified_p1_witness(u, &failure) || !certified_p2_witness(u, &failure)) {
        report.counterexamples.push_back(failure);
      }
    } else {
      const Word image = pal(u);
      const bool in_p1 =
          membership(PalindromeSide::P1, image, catalog).status == MembershipStatus::Member;
      const bool in_p2 =
          membership(PalindromeSide::P2, image, catalog).status == MembershipStatus::Member;
      if (in_p1 && in_p2) {
        report.counterexamples.push_back("Pal(" + u.text() +
                                         ") is in both sets despite u outside the language");
      }
    }
  });
  finish(report, start);
  return report;
}

VerificationReport claim_lemma5(int bound, int workers) {
  constexpr int kSamples = 200;
  constexpr std::size_t kImageCap = 40;
  const auto start = Clock::now();
  VerificationReport report{"lemma5", bound, {}, {}, 0, 0.0};
  const PclCatalog catalog = enumerate_pcl(bound, workers);

  std::mt19937 rng(0xC0FFEEu);
  std::uniform_int_distribution<int> length_dist(3, 6);
  std::uniform_int_distribution<int> letter_dist(0, 2);
  int accepted = 0;
  int attempts = 0;
  while (accepted < kSamples && attempts < 100000) {
    ++attempts;
    std::string u(static_cast<std::size_t>(length_dist(rng)), 'a');
    for (char& c : u) c = kLetters[letter_dist(rng)];
    if (!has_full_alphabet(u)) continue;
    const Word image = pal(ternary_word("b" + u));
    if (image.size() > kImageCap) continue;
    ++accepted;
    ++report.words_checked;

    if (factors_k(image, 2).count(ternary_word("ac")) > 0) {
      report.counterexamples.push_back("ac occurs in Fact_2(Pal(b" + u + "))");
    }
    if (membership(PalindromeSide::P1, image, catalog).status == MembershipStatus::Member ||
        membership(PalindromeSide::P2, image, catalog).status == MembershipStatus::Member) {
      report.counterexamples.push_back("Pal(b" + u + ") claims set membership");
    }
  }
  if (accepted < kSamples) {
    report.counterexamples.push_back("sampler failed to draw enough directives");
  }
  finish(report, start);
  return report;
}

VerificationReport claim_conjecture8(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"conjecture8", bound, {}, {}, 0, 0.0};
  const auto [p1, p2] = compute_sets(enumerate_pcl(bound, workers));
  for (const auto& [palindrome, witness] : p1.elements) {
    if (p2.elements.find(palindrome) == p2.elements.end()) continue;
    ++report.words_checked;
    const auto directive = directive_of(palindrome);
    if (!directive || !language_membership(*directive, DirectiveLanguage::AcsBs)) {
      report.counterexamples.push_back(palindrome.empty() ? "(empty word)" : palindrome.text());
    }
  }
  finish(report, start);
  return report;
}

VerificationReport claim_char_equivalence(int bound, int workers) {
  const auto start = Clock::now();
  VerificationReport report{"char-equivalence", bound, {}, {}, 0, 0.0};

  std::vector<std::string> lyndon;
  for_each_lyndon("abc", bound, [&](const std::string& w) {
    if (has_full_alphabet(w)) lyndon.push_back(w);
  });
  report.words_checked = lyndon.size();

  std::vector<std::uint8_t> mismatch(lyndon.size(), 0);
#ifdef _OPENMP
  const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
#else
  (void)workers;
#endif
  for (std::size_t i = 0; i < lyndon.size(); ++i) {
    const Word w = ternary_word(lyndon[i]);
    try {
      mismatch[i] = is_pcl(w) != is_pcl_via_bwt(w) ? 1 : 0;
    } catch (const std::exception&) {
      mismatch[i] = 1;  // rerun the word serially to see the failure
    }
  }
  for (std::size_t i = 0; i < lyndon.size(); ++i) {
    if (mismatch[i]) report.counterexamples.push_back(lyndon[i]);
  }
  finish(report, start);
  return report;
}

VerificationReport claim_binary_christoffel(int bound, int workers) {
  (void)workers;
  const auto start = Clock::now();
  VerificationReport report{"binary-christoffel", bound, {}, {}, 0, 0.0};
  for_each_lyndon("ab", bound, [&](const std::string& text) {
    if (text.size() < 2) return;  // single letters are trivially both
    ++report.words_checked;
    const Word w = ternary_word(text);
    if (is_perfectly_clustering(w) != is_christoffel(w)) {
      report.counterexamples.push_back(text);
    }
  });
  finish(report, start);
  return report;
}

}  // namespace

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names{
      "lemma1",      "prop2", "lemma3", "prop4", "prop6", "prop7",
      "lemma5", "conjecture8", "char-equivalence", "binary-christoffel"};
  return names;
}

VerificationReport verify_claim(const std::string& claim, int bound, int workers) {
  if (claim == "lemma1") return claim_lemma1(bound, workers);
  if (claim == "prop2") return claim_prop2(bound, workers);
  if (claim == "lemma3") return claim_lemma3(bound, workers);
  if (claim == "prop4") return claim_prop4(bound, workers);
  if (claim == "prop6") return claim_prop6(bound, workers);
  if (claim == "prop7") return claim_prop7(bound, workers);
  if (claim == "lemma5") return claim_lemma5(bound, workers);
  if (claim == "conjecture8") return claim_conjecture8(bound, workers);
  if (claim == "char-equivalence") return claim_char_equivalence(bound, workers);
  if (claim == "binary-christoffel") return claim_binary_christoffel(bound, workers);
  throw std::invalid_argument("unknown claim '" + claim + "'");
}

}  // namespace pcw
