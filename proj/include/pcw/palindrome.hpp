#pragma once

// Right palindromic closure, iterated palindromization and its inverse,
// the separating-letter test and the Christoffel-word criterion.

#include <optional>

#include "pcw/word.hpp"

namespace pcw {

// Longest suffix s of w with s = R(s). Throws on the empty word.
Word longest_palindromic_suffix(const Word& w);

// w^(+) = p s R(p) where w = ps and s is the longest palindromic suffix:
// the shortest palindrome having w as a prefix. Fixed point on palindromes.
Word palindromic_closure(const Word& w);

// Iterated palindromization: Pal(eps) = eps, Pal(ux) = (Pal(u) x)^(+).
Word pal(const Word& directive);

// Inverse of pal. Greedily grows the palindromic prefix chain; absent when
// w is not an iterated palindrome.
std::optional<Word> directive_of(const Word& w);

// True iff x occurs in every length-2 factor of w (vacuously for |w| <= 1).
bool is_separating(char x, const Word& w);

// w = x m y over a two-letter sub-alphabet {x < y} with m an iterated
// palindrome. Single letters and "xy" count as trivial Christoffel words.
// Throws when w uses more than two distinct letters.
bool is_christoffel(const Word& w);

}  // namespace pcw
