#pragma once

// Special factorizations w = a1 pi1 a2 ... pi_{k-1} ak, the two-palindrome
// product test, the length-2 factor-set filter and the two perfectly
// clustering Lyndon classifiers.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcw/word.hpp"

namespace pcw {

struct SpecialFactorization {
  std::string separators;   // distinct letters of w in increasing rank order
  std::vector<Word> parts;  // k-1 parts interleaved between the separators
  bool palindromic = false;

  // Interleaves separators and parts back into the original text.
  std::string flatten() const;
  // "a · cbc · b · bcb · c", empty parts rendered as the epsilon sign.
  std::string pretty() const;
};

struct PalindromePairSplit {
  Word left;
  Word right;
};

enum class Lemma1Set { S1, S2, S3, S4 };

std::string to_string(Lemma1Set s);

// The admissible length-2 factor sets of perfectly clustering ternary words.
const std::set<std::string>& lemma1_factors(Lemma1Set s);

// All factorizations w = a pi1 b pi2 c, one per separator-b position, in
// position order. Empty when w does not start with a or end with c. Throws
// unless alph(w) = {a,b,c}.
std::vector<SpecialFactorization> special_factorizations(const Word& w);

// The factorization with both parts palindromic, if any (leftmost separator
// otherwise impossible: uniqueness is asserted for words the BWT classifier
// accepts, and violated uniqueness throws).
std::optional<SpecialFactorization> palindromic_special_factorization(const Word& w);

// Generic k-separator shape over alph(w); k = 1 accepts single letters.
std::optional<SpecialFactorization> general_palindromic_factorization(const Word& w);

// Some split w = left . right into two palindromes (either may be empty),
// preferring the shortest left part.
std::optional<PalindromePairSplit> product_of_two_palindromes(const Word& w);

// Identifiers of the Lemma1 sets containing f2; empty means decisively
// incompatible with perfect clustering.
std::vector<Lemma1Set> lemma1_compatible(const std::set<Word, LexLess>& f2);

// True iff Fact_2(a . candidate . b) fits no Lemma1 set: then no word
// a candidate b u c is perfectly clustering, whatever u is.
bool p1_obstruction(const Word& candidate);

// Product-of-two-palindromes plus palindromic special factorization.
bool is_pcl(const Word& w);

// Lyndon plus decreasing BWT; the independent route.
bool is_pcl_via_bwt(const Word& w);

}  // namespace pcw
