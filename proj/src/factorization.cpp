#include "pcw/factorization.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pcw/bwt.hpp"

namespace pcw {

std::string SpecialFactorization::flatten() const {
  std::string out;
  for (std::size_t i = 0; i < separators.size(); ++i) {
    out.push_back(separators[i]);
    if (i < parts.size()) out += parts[i].text();
  }
  return out;
}

std::string SpecialFactorization::pretty() const {
  std::string out;
  for (std::size_t i = 0; i < separators.size(); ++i) {
    if (i > 0) out += " · ";
    out.push_back(separators[i]);
    if (i < parts.size()) {
      out += " · ";
      out += parts[i].empty() ? std::string("ε") : parts[i].text();
    }
  }
  return out;
}

std::string to_string(Lemma1Set s) {
  switch (s) {
    case Lemma1Set::S1: return "S1";
    case Lemma1Set::S2: return "S2";
    case Lemma1Set::S3: return "S3";
    case Lemma1Set::S4: return "S4";
  }
  return "?";
}

const std::set<std::string>& lemma1_factors(Lemma1Set s) {
  static const std::set<std::string> s1{"ab", "ac", "ba", "bb", "ca"};
  static const std::set<std::string> s2{"ac", "bb", "bc", "ca", "cb"};
  static const std::set<std::string> s3{"aa", "ab", "ac", "ba", "ca"};
  static const std::set<std::string> s4{"ac", "bc", "ca", "cb", "cc"};
  switch (s) {
    case Lemma1Set::S1: return s1;
    case Lemma1Set::S2: return s2;
    case Lemma1Set::S3: return s3;
    case Lemma1Set::S4: return s4;
  }
  throw std::logic_error("unreachable");
}

namespace {

void require_full_ternary(const Word& w, const char* op) {
  if (alph(w) != std::set<char>{'a', 'b', 'c'}) {
    throw std::invalid_argument(std::string(op) + " requires alph(w) = {a,b,c}");
  }
}

bool palindromic_text(const std::string& t) {
  for (std::size_t i = 0, j = t.size(); i + 1 < j; ++i, --j) {
    if (t[i] != t[j - 1]) return false;
  }
  return true;
}

}  // namespace

std::vector<SpecialFactorization> special_factorizations(const Word& w) {
  require_full_ternary(w, "special_factorizations");
  std::vector<SpecialFactorization> out;
  const std::string& t = w.text();
  const std::size_t n = t.size();
  if (t.front() != 'a' || t.back() != 'c') return out;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (t[i] != 'b') continue;
    Word pi1 = w.with_text(t.substr(1, i - 1));
    Word pi2 = w.with_text(t.substr(i + 1, n - i - 2));
    const bool pal = palindromic_text(pi1.text()) && palindromic_text(pi2.text());
    out.push_back(SpecialFactorization{"abc", {std::move(pi1), std::move(pi2)}, pal});
  }
  return out;
}

std::optional<SpecialFactorization> palindromic_special_factorization(const Word& w) {
  std::vector<SpecialFactorization> palindromic;
  for (auto& f : special_factorizations(w)) {
    if (f.palindromic) palindromic.push_back(std::move(f));
  }
  if (palindromic.empty()) return std::nullopt;
  if (palindromic.size() > 1 && is_pcl_via_bwt(w)) {
    // The factorization of a perfectly clustering Lyndon word is unique;
    // two of them mean a classifier bug, not a mathematical discovery.
    throw std::logic_error("uniqueness violation: " + w.text() +
                           " is perfectly clustering Lyndon with " +
                           std::to_string(palindromic.size()) +
                           " palindromic special factorizations");
  }
  return palindromic.front();
}

std::optional<SpecialFactorization> general_palindromic_factorization(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("general_palindromic_factorization requires a nonempty word");
  }
  const OrderedAlphabet& alpha = *w.alphabet();
  const std::set<char> letter_set = alph(w);
  std::string separators(letter_set.begin(), letter_set.end());
  std::sort(separators.begin(), separators.end(),
            [&](char x, char y) { return alpha.rank_of(x) < alpha.rank_of(y); });

  const std::string& t = w.text();
  const std::size_t n = t.size();
  const std::size_t k = separators.size();
  if (k == 1) {
    if (n != 1) return std::nullopt;
    return SpecialFactorization{separators, {}, true};
  }
  if (t.front() != separators.front() || t.back() != separators.back()) return std::nullopt;

  // Choose positions for the middle separators left to right; parts between
  // consecutive separators must be palindromes.
  std::vector<std::size_t> pos(k);
  pos[0] = 0;
  pos[k - 1] = n - 1;
  std::vector<Word> parts;

  const std::function<bool(std::size_t)> place = [&](std::size_t j) -> bool {
    if (j == k - 1) {
      const std::size_t begin = pos[j - 1] + 1;
      const std::string part = t.substr(begin, n - 1 - begin);
      if (!palindromic_text(part)) return false;
      parts.push_back(w.with_text(part));
      return true;
    }
    for (std::size_t p = pos[j - 1] + 1; p + (k - 1 - j) < n; ++p) {
      if (t[p] != separators[j]) continue;
      const std::size_t begin = pos[j - 1] + 1;
      const std::string part = t.substr(begin, p - begin);
      if (!palindromic_text(part)) continue;
      pos[j] = p;
      parts.push_back(w.with_text(part));
      if (place(j + 1)) return true;
      parts.pop_back();
    }
    return false;
  };

  if (!place(1)) return std::nullopt;
  return SpecialFactorization{separators, std::move(parts), true};
}

std::optional<PalindromePairSplit> product_of_two_palindromes(const Word& w) {
  const std::string& t = w.text();
  for (std::size_t cut = 0; cut <= t.size(); ++cut) {
    const std::string left = t.substr(0, cut);
    const std::string right = t.substr(cut);
    if (palindromic_text(left) && palindromic_text(right)) {
      return PalindromePairSplit{w.with_text(left), w.with_text(right)};
    }
  }
  return std::nullopt;
}

std::vector<Lemma1Set> lemma1_compatible(const std::set<Word, LexLess>& f2) {
  std::set<std::string> factors;
  for (const Word& f : f2) {
    if (f.size() != 2 || !std::all_of(f.text().begin(), f.text().end(),
                                      [](char c) { return c == 'a' || c == 'b' || c == 'c'; })) {
      throw std::invalid_argument("lemma1_compatible expects length-2 factors over {a,b,c}");
    }
    factors.insert(f.text());
  }
  std::vector<Lemma1Set> out;
  for (Lemma1Set s : {Lemma1Set::S1, Lemma1Set::S2, Lemma1Set::S3, Lemma1Set::S4}) {
    const std::set<std::string>& allowed = lemma1_factors(s);
    if (std::includes(allowed.begin(), allowed.end(), factors.begin(), factors.end())) {
      out.push_back(s);
    }
  }
  return out;
}

bool p1_obstruction(const Word& candidate) {
  for (char c : candidate.text()) {
    if (c != 'a' && c != 'b' && c != 'c') {
      throw std::invalid_argument("p1_obstruction expects a word over {a,b,c}");
    }
  }
  const Word framed(std::string("a") + candidate.text() + "b", ternary_alphabet());
  return lemma1_compatible(factors_k(framed, 2)).empty();
}

bool is_pcl(const Word& w) {
  require_full_ternary(w, "is_pcl");
  return product_of_two_palindromes(w).has_value() &&
         palindromic_special_factorization(w).has_value();
}

bool is_pcl_via_bwt(const Word& w) {
  if (w.empty()) {
    throw std::invalid_argument("is_pcl_via_bwt is undefined for the empty word");
  }
  return is_lyndon(w) && is_perfectly_clustering(w);
}

}  // namespace pcw
