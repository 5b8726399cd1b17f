#include "pcw/palindrome.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pcw {

namespace {

bool palindromic_range(const std::string& t, std::size_t begin, std::size_t end) {
  while (begin + 1 < end) {
    if (t[begin] != t[end - 1]) return false;
    ++begin;
    --end;
  }
  return true;
}

// Closure on raw text; the Word wrapper revalidates nothing new.
std::string closure_text(const std::string& t) {
  if (t.empty()) return t;
  std::size_t start = 0;
  while (!palindromic_range(t, start, t.size())) ++start;
  std::string out = t;
  out.append(t.rbegin() + static_cast<std::ptrdiff_t>(t.size() - start), t.rend());
  return out;
}

}  // namespace

Word longest_palindromic_suffix(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("the empty word has no palindromic suffix");
  }
  const std::string& t = w.text();
  std::size_t start = 0;
  while (!palindromic_range(t, start, t.size())) ++start;
  return w.with_text(t.substr(start));
}

Word palindromic_closure(const Word& w) {
  return w.with_text(closure_text(w.text()));
}

Word pal(const Word& directive) {
  std::string image;
  for (char x : directive.text()) {
    image.push_back(x);
    image = closure_text(image);
  }
  return directive.with_text(std::move(image));
}

std::optional<Word> directive_of(const Word& w) {
  const std::string& t = w.text();
  std::string current;  // Pal of the directive collected so far
  std::string u;
  while (current.size() < t.size()) {
    current.push_back(t[current.size()]);
    u.push_back(current.back());
    current = closure_text(current);
    if (current.size() > t.size() || t.compare(0, current.size(), current) != 0) {
      return std::nullopt;
    }
  }
  return w.with_text(std::move(u));
}

bool is_separating(char x, const Word& w) {
  const std::string& t = w.text();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i] != x && t[i + 1] != x) return false;
  }
  return true;
}

bool is_christoffel(const Word& w) {
  const std::set<char> letters = alph(w);
  if (letters.size() > 2) {
    throw std::invalid_argument("is_christoffel requires a word over at most two letters");
  }
  if (w.empty()) return false;
  if (w.size() == 1) return true;
  if (letters.size() != 2) return false;

  const OrderedAlphabet& alpha = *w.alphabet();
  const auto rank_less = [&](char x, char y) { return alpha.rank_of(x) < alpha.rank_of(y); };
  const char low = *std::min_element(letters.begin(), letters.end(), rank_less);
  const char high = *std::max_element(letters.begin(), letters.end(), rank_less);
  if (w.at(0) != low || w.at(w.size() - 1) != high) return false;

  const Word middle = w.with_text(w.text().substr(1, w.size() - 2));
  return directive_of(middle).has_value();
}

}  // namespace pcw
