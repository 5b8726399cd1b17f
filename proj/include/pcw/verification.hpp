#pragma once

// Exhaustive enumeration of perfectly clustering Lyndon words, the P1/P2 set
// slices, three-valued membership and the claim verification harness.
//
// Enumeration runs a depth-first search over {a,b,c}* pruned by the Lemma1
// factor sets, confirmed per word by the rotation-sort BWT. Three engines:
// the pruned serial reference, an OpenMP variant that fans the DFS prefix
// subtrees across threads, and an unpruned brute force used as the oracle at
// small bounds. All three return the same canonically sorted catalog.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcw/factorization.hpp"
#include "pcw/word.hpp"

namespace pcw {

struct CatalogEntry {
  Word word;
  SpecialFactorization factorization;  // the unique palindromic special factorization
};

struct PclCatalog {
  int bound = 0;
  std::vector<CatalogEntry> entries;  // sorted by length, then lex
};

// All perfectly clustering Lyndon words over {a,b,c} with full alphabet and
// 3 <= |w| <= bound. workers: 0 = one thread per core, 1 = serial, n = n
// threads. The catalog does not depend on the worker count.
PclCatalog enumerate_pcl(int bound, int workers = 0);

// Single-threaded pruned reference engine.
PclCatalog enumerate_pcl_serial(int bound);

// No pruning: tests every word of length 3..bound. Exponential; keep the
// bound small. Used to check prune soundness.
PclCatalog enumerate_pcl_unpruned(int bound);

enum class PalindromeSide { P1, P2 };

std::string to_string(PalindromeSide side);

struct PalindromeSetSlice {
  PalindromeSide side;
  int bound = 0;
  std::map<Word, Word, LenLexLess> elements;  // palindrome -> shortest witness
};

// P1 and P2 restricted to the catalog: first parts and second parts of the
// palindromic special factorizations, shortest witness kept per palindrome.
std::pair<PalindromeSetSlice, PalindromeSetSlice> compute_sets(const PclCatalog& catalog);

enum class MembershipStatus { Member, NonMemberDecisive, UnknownUpTo };

std::string to_string(MembershipStatus status);

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::UnknownUpTo;
  std::optional<Word> witness;           // Member
  std::vector<std::string> obstruction;  // NonMemberDecisive: the offending Fact_2, sorted
  int bound = 0;
};

// Membership of a palindrome in P1 or P2. Member when the catalog holds a
// witness; decisively non-member when the Lemma1 prefix obstruction applies
// (theta-mirrored for P2); unknown otherwise. Throws unless the candidate is
// a palindrome over {a,b,c}.
MembershipVerdict membership(PalindromeSide side, const Word& candidate,
                             const PclCatalog& catalog);
MembershipVerdict membership(PalindromeSide side, const Word& candidate, int bound);

struct VerificationReport {
  std::string claim;
  int bound = 0;
  enum class Status { Pass, Counterexample, Unknown } status = Status::Unknown;
  std::vector<std::string> counterexamples;
  std::uint64_t words_checked = 0;
  double elapsed_ms = 0.0;
};

std::string to_string(VerificationReport::Status status);

// Claim identifiers accepted by verify_claim, in canonical order.
const std::vector<std::string>& claim_names();

// Bounded verification of one named claim. Deterministic for a given
// (claim, bound); worker count only affects speed.
VerificationReport verify_claim(const std::string& claim, int bound, int workers = 0);

enum class DirectiveLanguage { AcsAbs, AcsBcs, AcsBs };

// "acs-abs" = {a,c}*{a,b}*, "acs-bcs" = {a,c}*{b,c}*, "acs-bs" = {a,c}*b*.
std::optional<DirectiveLanguage> parse_language(std::string_view id);

bool language_membership(const Word& u, DirectiveLanguage language);

// Lyndon words over the given symbols (in increasing order) with length in
// [1, max_len], generated in lexicographic order.
void for_each_lyndon(std::string_view symbols, int max_len,
                     const std::function<void(const std::string&)>& fn);

}  // namespace pcw
