#pragma once

// The a<->c exchange theta, the antimorphism omega = R o theta, and the four
// free-group automorphisms lambda_a, lambda_b, rho_b, rho_c together with
// their inverses. Free-group words print with uppercase letters for inverse
// generators ("aB" = a b^-1).

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcw/word.hpp"

namespace pcw {

struct SignedLetter {
  char symbol;
  int exponent;  // +1 or -1
  bool operator==(const SignedLetter&) const = default;
};

class FreeGroupWord {
 public:
  FreeGroupWord() = default;

  static FreeGroupWord from_word(const Word& w);
  // Iteratively cancels adjacent x x^-1 / x^-1 x pairs.
  static FreeGroupWord reduce(const std::vector<SignedLetter>& letters);

  const std::vector<SignedLetter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool positive() const;
  // The underlying plain word, if every exponent is +1.
  std::optional<Word> to_word(const AlphabetRef& alphabet) const;
  FreeGroupWord inverse() const;
  std::string to_string() const;

  bool operator==(const FreeGroupWord&) const = default;

 private:
  std::vector<SignedLetter> letters_;  // invariant: freely reduced
};

enum class AutomorphismName { LambdaA, LambdaB, RhoB, RhoC };

std::string to_string(AutomorphismName name);

// A substitution on the free-group generators a, b, c.
struct GeneratorMap {
  std::string label;
  std::array<FreeGroupWord, 3> images;  // images of a, b, c

  const FreeGroupWord& image_of(char symbol) const;
  FreeGroupWord apply(const FreeGroupWord& w) const;
};

const GeneratorMap& automorphism(AutomorphismName name);

// The map g with g(f(x)) = x on every generator.
GeneratorMap inverse_automorphism(AutomorphismName name);

FreeGroupWord apply_automorphism(const GeneratorMap& f, const FreeGroupWord& w);

// Letterwise a->c, b->b, c->a. Throws on letters outside {a,b,c}.
Word theta(const Word& w);

// omega = R o theta; sends perfectly clustering Lyndon words to perfectly
// clustering Lyndon words.
Word omega(const Word& w);

// Applies f_{x_n} first and f_{x_1} last to abac, where u = x_1 ... x_n and
// a -> lambda_a, b -> rho_b, c -> rho_c. Requires u in {a,c}* {a,b}*; the
// result is a positive word whose first palindromic part is Pal(u).
Word witness_from_directive(const Word& directive);

// A shorter perfectly clustering preimage of w under one of the four
// automorphisms, tried in the order lambda_a, lambda_b, rho_b, rho_c.
// Precondition: w perfectly clustering with |w| >= 3.
std::optional<std::pair<AutomorphismName, Word>> decompose(const Word& w);

// Every qualifying (automorphism, preimage) pair, same trial order.
std::vector<std::pair<AutomorphismName, Word>> decompose_all(const Word& w);

}  // namespace pcw
