#pragma once

// Ordered alphabets and finite words. Lexicographic comparisons go through
// alphabet rank, not character codes, so non-contiguous alphabets order
// correctly.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pcw {

class OrderedAlphabet {
 public:
  // Symbols must be pairwise distinct; rank is the list position.
  explicit OrderedAlphabet(std::string_view symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbols() const { return symbols_; }
  bool contains(char c) const { return rank_of(c) >= 0; }
  int rank_of(char c) const { return rank_[static_cast<unsigned char>(c)]; }
  char symbol_at(int rank) const { return symbols_.at(static_cast<std::size_t>(rank)); }

  bool operator==(const OrderedAlphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> rank_;
};

using AlphabetRef = std::shared_ptr<const OrderedAlphabet>;

AlphabetRef make_alphabet(std::string_view symbols);

// The shared a < b < c alphabet everything ternary runs on.
const AlphabetRef& ternary_alphabet();

class Word {
 public:
  // Validates every letter against the alphabet.
  Word(std::string text, AlphabetRef alphabet);

  const std::string& text() const { return text_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  std::size_t size() const { return text_.size(); }
  bool empty() const { return text_.empty(); }
  char at(std::size_t i) const { return text_[i]; }

  // Derive a word over the same alphabet (still validated).
  Word with_text(std::string text) const { return Word(std::move(text), alphabet_); }

  bool operator==(const Word& other) const { return text_ == other.text_; }

 private:
  std::string text_;
  AlphabetRef alphabet_;
};

// Strict lexicographic order by rank. Both words must share an alphabet.
bool lex_less(const Word& a, const Word& b);

struct LexLess {
  bool operator()(const Word& a, const Word& b) const { return lex_less(a, b); }
};

// Length first, then lex: the canonical order for catalogs and set slices.
struct LenLexLess {
  bool operator()(const Word& a, const Word& b) const;
};

// Occurrence counts keyed by symbol; every alphabet symbol is present.
struct ParikhVector {
  std::map<char, long long> counts;
  bool operator==(const ParikhVector&) const = default;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);
ParikhVector parikh(const Word& w);
std::set<char> alph(const Word& w);

// Deduplicated contiguous factors of length k; {epsilon} for k = 0, empty
// set when k exceeds |w|.
std::set<Word, LexLess> factors_k(const Word& w, std::size_t k);

bool is_primitive(const Word& w);           // throws on the empty word
std::vector<Word> conjugates(const Word& w);
bool is_lyndon(const Word& w);              // throws on the empty word
Word lyndon_conjugate(const Word& w);       // throws unless w is primitive

}  // namespace pcw
