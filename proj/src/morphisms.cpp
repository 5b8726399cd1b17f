#include "pcw/morphisms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "pcw/bwt.hpp"

namespace pcw {

namespace {

int generator_index(char symbol) {
  switch (symbol) {
    case 'a': return 0;
    case 'b': return 1;
    case 'c': return 2;
    default:
      throw std::invalid_argument(std::string("free-group generator expected, got '") +
                                  symbol + "'");
  }
}

// "aB" notation: lowercase generator, uppercase inverse.
FreeGroupWord parse_signed(std::string_view s) {
  std::vector<SignedLetter> letters;
  letters.reserve(s.size());
  for (char c : s) {
    const bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
    const char symbol = inv ? static_cast<char>(std::tolower(static_cast<unsigned char>(c))) : c;
    generator_index(symbol);
    letters.push_back({symbol, inv ? -1 : +1});
  }
  return FreeGroupWord::reduce(letters);
}

}  // namespace

FreeGroupWord FreeGroupWord::from_word(const Word& w) {
  std::vector<SignedLetter> letters;
  letters.reserve(w.size());
  for (char c : w.text()) {
    generator_index(c);
    letters.push_back({c, +1});
  }
  return reduce(letters);
}

FreeGroupWord FreeGroupWord::reduce(const std::vector<SignedLetter>& letters) {
  FreeGroupWord out;
  out.letters_.reserve(letters.size());
  for (const SignedLetter& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw std::invalid_argument("signed letter exponent must be +1 or -1");
    }
    generator_index(l.symbol);
    if (!out.letters_.empty() && out.letters_.back().symbol == l.symbol &&
        out.letters_.back().exponent == -l.exponent) {
      out.letters_.pop_back();
    } else {
      out.letters_.push_back(l);
    }
  }
  return out;
}

bool FreeGroupWord::positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const SignedLetter& l) { return l.exponent == 1; });
}

std::optional<Word> FreeGroupWord::to_word(const AlphabetRef& alphabet) const {
  if (!positive()) return std::nullopt;
  std::string text;
  text.reserve(letters_.size());
  for (const SignedLetter& l : letters_) text.push_back(l.symbol);
  return Word(std::move(text), alphabet);
}

FreeGroupWord FreeGroupWord::inverse() const {
  FreeGroupWord out;
  out.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.letters_.push_back({it->symbol, -it->exponent});
  }
  return out;
}

std::string FreeGroupWord::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (const SignedLetter& l : letters_) {
    out.push_back(l.exponent == 1
                      ? l.symbol
                      : static_cast<char>(std::toupper(static_cast<unsigned char>(l.symbol))));
  }
  return out;
}

std::string to_string(AutomorphismName name) {
  switch (name) {
    case AutomorphismName::LambdaA: return "lambda_a";
    case AutomorphismName::LambdaB: return "lambda_b";
    case AutomorphismName::RhoB: return "rho_b";
    case AutomorphismName::RhoC: return "rho_c";
  }
  return "?";
}

const FreeGroupWord& GeneratorMap::image_of(char symbol) const {
  return images[static_cast<std::size_t>(generator_index(symbol))];
}

FreeGroupWord GeneratorMap::apply(const FreeGroupWord& w) const {
  std::vector<SignedLetter> out;
  for (const SignedLetter& l : w.letters()) {
    const FreeGroupWord image =
        l.exponent == 1 ? image_of(l.symbol) : image_of(l.symbol).inverse();
    out.insert(out.end(), image.letters().begin(), image.letters().end());
  }
  return FreeGroupWord::reduce(out);
}

const GeneratorMap& automorphism(AutomorphismName name) {
  static const GeneratorMap lambda_a{"lambda_a",
                                     {parse_signed("a"), parse_signed("ab"), parse_signed("ac")}};
  static const GeneratorMap lambda_b{"lambda_b",
                                     {parse_signed("aB"), parse_signed("b"), parse_signed("bc")}};
  static const GeneratorMap rho_b{"rho_b",
                                  {parse_signed("ab"), parse_signed("b"), parse_signed("Bc")}};
  static const GeneratorMap rho_c{"rho_c",
                                  {parse_signed("ac"), parse_signed("bc"), parse_signed("c")}};
  switch (name) {
    case AutomorphismName::LambdaA: return lambda_a;
    case AutomorphismName::LambdaB: return lambda_b;
    case AutomorphismName::RhoB: return rho_b;
    case AutomorphismName::RhoC: return rho_c;
  }
  throw std::logic_error("unreachable");
}

GeneratorMap inverse_automorphism(AutomorphismName name) {
  // Hard-coded from the algebra; the generator round-trip is tested.
  switch (name) {
    case AutomorphismName::LambdaA:
      return {"lambda_a_inv", {parse_signed("a"), parse_signed("Ab"), parse_signed("Ac")}};
    case AutomorphismName::LambdaB:
      return {"lambda_b_inv", {parse_signed("ab"), parse_signed("b"), parse_signed("Bc")}};
    case AutomorphismName::RhoB:
      return {"rho_b_inv", {parse_signed("aB"), parse_signed("b"), parse_signed("bc")}};
    case AutomorphismName::RhoC:
      return {"rho_c_inv", {parse_signed("aC"), parse_signed("bC"), parse_signed("c")}};
  }
  throw std::logic_error("unreachable");
}

FreeGroupWord apply_automorphism(const GeneratorMap& f, const FreeGroupWord& w) {
  return f.apply(w);
}

Word theta(const Word& w) {
  std::string out = w.text();
  for (char& c : out) {
    switch (c) {
      case 'a': c = 'c'; break;
      case 'b': break;
      case 'c': c = 'a'; break;
      default:
        throw std::invalid_argument("theta is defined on {a,b,c} only");
    }
  }
  return w.with_text(std::move(out));
}

Word omega(const Word& w) {
  return reverse(theta(w));
}

namespace {

// u in {a,c}* {a,b}*: no c may follow a b.
bool in_witness_language(const std::string& u) {
  bool seen_b = false;
  for (char c : u) {
    if (c == 'b') seen_b = true;
    if (c == 'c' && seen_b) return false;
    if (c != 'a' && c != 'b' && c != 'c') return false;
  }
  return true;
}

AutomorphismName map_for_letter(char x) {
  switch (x) {
    case 'a': return AutomorphismName::LambdaA;
    case 'b': return AutomorphismName::RhoB;
    case 'c': return AutomorphismName::RhoC;
    default: throw std::invalid_argument("directive letters must be a, b or c");
  }
}

}  // namespace

Word witness_from_directive(const Word& directive) {
  const std::string& u = directive.text();
  if (!in_witness_language(u)) {
    throw std::invalid_argument("directive '" + u + "' is outside {a,c}*{a,b}*");
  }
  FreeGroupWord current = parse_signed("abac");
  for (auto it = u.rbegin(); it != u.rend(); ++it) {  // f_{x_n} acts first
    current = automorphism(map_for_letter(*it)).apply(current);
  }
  auto word = current.to_word(ternary_alphabet());
  if (!word) {
    throw std::logic_error("witness construction produced a non-positive word for '" + u + "'");
  }
  return *word;
}

std::vector<std::pair<AutomorphismName, Word>> decompose_all(const Word& w) {
  if (w.size() < 3 || !is_perfectly_clustering(w)) {
    throw std::invalid_argument(
        "decompose requires a perfectly clustering word of length at least 3");
  }
  std::vector<std::pair<AutomorphismName, Word>> out;
  const FreeGroupWord image = FreeGroupWord::from_word(w);
  for (AutomorphismName name : {AutomorphismName::LambdaA, AutomorphismName::LambdaB,
                                AutomorphismName::RhoB, AutomorphismName::RhoC}) {
    const FreeGroupWord preimage = inverse_automorphism(name).apply(image);
    if (!preimage.positive() || preimage.empty() || preimage.size() >= w.size()) continue;
    const Word u = *preimage.to_word(ternary_alphabet());
    if (is_perfectly_clustering(u)) out.emplace_back(name, u);
  }
  return out;
}

std::optional<std::pair<AutomorphismName, Word>> decompose(const Word& w) {
  auto all = decompose_all(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace pcw
