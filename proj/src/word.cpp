#include "pcw/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcw {

OrderedAlphabet::OrderedAlphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must contain at least one symbol");
  }
  rank_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = rank_[static_cast<unsigned char>(symbols_[i])];
    if (slot >= 0) {
      throw std::invalid_argument("alphabet symbols must be pairwise distinct");
    }
    slot = static_cast<int>(i);
  }
}

AlphabetRef make_alphabet(std::string_view symbols) {
  return std::make_shared<const OrderedAlphabet>(symbols);
}

const AlphabetRef& ternary_alphabet() {
  static const AlphabetRef instance = make_alphabet("abc");
  return instance;
}

Word::Word(std::string text, AlphabetRef alphabet)
    : text_(std::move(text)), alphabet_(std::move(alphabet)) {
  if (!alphabet_) {
    throw std::invalid_argument("word requires an alphabet");
  }
  for (char c : text_) {
    if (!alphabet_->contains(c)) {
      throw std::invalid_argument(std::string("letter '") + c +
                                  "' is not in alphabet \"" + alphabet_->symbols() + "\"");
    }
  }
}

bool lex_less(const Word& a, const Word& b) {
  const OrderedAlphabet& alpha = *a.alphabet();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = alpha.rank_of(a.at(i));
    const int rb = alpha.rank_of(b.at(i));
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

bool LenLexLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

Word reverse(const Word& w) {
  std::string r(w.text().rbegin(), w.text().rend());
  return w.with_text(std::move(r));
}

bool is_palindrome(const Word& w) {
  const std::string& t = w.text();
  for (std::size_t i = 0, j = t.size(); i + 1 < j; ++i, --j) {
    if (t[i] != t[j - 1]) return false;
  }
  return true;
}

ParikhVector parikh(const Word& w) {
  ParikhVector v;
  for (char s : w.alphabet()->symbols()) v.counts[s] = 0;
  for (char c : w.text()) ++v.counts[c];
  return v;
}

std::set<char> alph(const Word& w) {
  return std::set<char>(w.text().begin(), w.text().end());
}

std::set<Word, LexLess> factors_k(const Word& w, std::size_t k) {
  std::set<Word, LexLess> out;
  if (k > w.size()) return out;
  for (std::size_t i = 0; i + k <= w.size(); ++i) {
    out.insert(w.with_text(w.text().substr(i, k)));
  }
  return out;
}

bool is_primitive(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) {
    throw std::invalid_argument("primitivity is undefined for the empty word");
  }
  const std::string& t = w.text();
  for (std::size_t period = 1; period <= n / 2; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (std::size_t i = period; i < n && repeats; ++i) {
      repeats = t[i] == t[i - period];
    }
    if (repeats) return false;
  }
  return true;
}

std::vector<Word> conjugates(const Word& w) {
  const std::size_t n = w.size();
  std::vector<Word> out;
  out.reserve(n);
  const std::string doubled = w.text() + w.text();
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(w.with_text(doubled.substr(i, n)));
  }
  return out;
}

namespace {

// Compare rotations i and j of w by rank; 0-based start offsets.
int compare_rotations(const Word& w, std::size_t i, std::size_t j) {
  const OrderedAlphabet& alpha = *w.alphabet();
  const std::string& t = w.text();
  const std::size_t n = t.size();
  for (std::size_t k = 0; k < n; ++k) {
    const int ra = alpha.rank_of(t[(i + k) % n]);
    const int rb = alpha.rank_of(t[(j + k) % n]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool is_lyndon(const Word& w) {
  const std::size_t n = w.size();
  if (n == 0) {
    throw std::invalid_argument("the Lyndon property is undefined for the empty word");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (compare_rotations(w, 0, i) >= 0) return false;  // also rejects non-primitive words
  }
  return true;
}

Word lyndon_conjugate(const Word& w) {
  if (w.empty() || !is_primitive(w)) {
    throw std::invalid_argument("lyndon_conjugate requires a primitive word");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (compare_rotations(w, i, best) < 0) best = i;
  }
  const std::string doubled = w.text() + w.text();
  return w.with_text(doubled.substr(best, w.size()));
}

}  // namespace pcw
