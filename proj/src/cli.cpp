#include "pcw/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcw/bwt.hpp"
#include "pcw/factorization.hpp"
#include "pcw/morphisms.hpp"
#include "pcw/palindrome.hpp"
#include "pcw/verification.hpp"
#include "pcw/word.hpp"

namespace pcw::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct CliError {
  int code;
  std::string message;
};

struct WordInput {
  std::string text;
  int line;  // 0 for the command-line argument
};

std::string describe_input(const WordInput& input) {
  return input.line == 0 ? "argument" : "line " + std::to_string(input.line);
}

bool needs_ternary(const std::string& subcommand) {
  static const std::vector<std::string> ternary = {
      "factorize", "check", "membership", "decompose", "witness", "enumerate", "sets", "verify"};
  return std::find(ternary.begin(), ternary.end(), subcommand) != ternary.end();
}

void validate_config(const RunConfig& cfg) {
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") {
    throw CliError{2, "unknown format '" + cfg.format + "' (expected text, json or csv)"};
  }
  if (cfg.max_len < 1) {
    throw CliError{2, "--max-len must be at least 1"};
  }
  if (needs_ternary(cfg.subcommand) && cfg.alphabet != "abc") {
    throw CliError{2, "subcommand '" + cfg.subcommand + "' works over the alphabet abc only"};
  }
}

std::vector<WordInput> gather_inputs(const RunConfig& cfg, std::istream& in) {
  if (cfg.word && cfg.file) {
    throw CliError{2, "give either a word argument or --file, not both"};
  }
  if (cfg.word) return {WordInput{*cfg.word, 0}};
  if (!cfg.file) {
    throw CliError{2, "subcommand '" + cfg.subcommand + "' needs a word argument or --file"};
  }

  std::ifstream file_stream;
  std::istream* source = &in;
  if (*cfg.file != "-") {
    file_stream.open(*cfg.file);
    if (!file_stream) {
      throw CliError{2, "cannot read file '" + *cfg.file + "'"};
    }
    source = &file_stream;
  }

  std::vector<WordInput> inputs;
  std::string line;
  int number = 0;
  while (std::getline(*source, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (line.empty() || line.front() == '#') continue;
    inputs.push_back(WordInput{line, number});
  }
  return inputs;
}

// Generic subcommands fall back to the word's own letters (character order)
// when the default alphabet does not fit and none was given explicitly.
Word build_word(const RunConfig& cfg, const WordInput& input) {
  const auto fits = [&](const std::string& symbols) {
    const OrderedAlphabet probe(symbols);
    return std::all_of(input.text.begin(), input.text.end(),
                       [&](char c) { return probe.contains(c); });
  };
  try {
    if (needs_ternary(cfg.subcommand) || fits(cfg.alphabet) || cfg.alphabet_explicit) {
      return Word(input.text, needs_ternary(cfg.subcommand) ? ternary_alphabet()
                                                            : make_alphabet(cfg.alphabet));
    }
    std::string symbols(input.text.begin(), input.text.end());
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return Word(input.text, make_alphabet(symbols));
  } catch (const std::invalid_argument& e) {
    throw CliError{2, describe_input(input) + ": " + e.what()};
  }
}

std::string show(const std::string& text) { return text.empty() ? "ε" : text; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::vector<std::string> escaped;
  escaped.reserve(fields.size());
  for (const auto& f : fields) escaped.push_back(csv_field(f));
  return join(escaped, ",");
}

// One query result, carrying all three renderings.
struct Record {
  json object;
  std::vector<std::string> csv;
  std::string text;  // essence only; the batch renderer prefixes the input
};

Record record_bwt(const Word& w) {
  const Word transform = bwt(w);
  Record r;
  r.object = json{{"word", w.text()}, {"bwt", transform.text()}};
  r.csv = {w.text(), transform.text()};
  r.text = transform.text();
  return r;
}

Record record_cluster(const Word& w) {
  const ClusteringReport report = clustering_report(w);
  json runs = json::array();
  std::vector<std::string> run_texts;
  for (const auto& [symbol, length] : report.runs) {
    runs.push_back(json{{"symbol", std::string(1, symbol)}, {"length", length}});
    run_texts.push_back(std::string(1, symbol) + ":" + std::to_string(length));
  }
  json permutation;
  std::vector<std::string> perm_texts;
  if (report.permutation) {
    permutation = *report.permutation;
    for (int rank : *report.permutation) perm_texts.push_back(std::to_string(rank));
  }
  Record r;
  r.object = json{{"word", w.text()},
                  {"bwt", report.bwt.text()},
                  {"runs", runs},
                  {"permutation", permutation},
                  {"perfect", report.perfect}};
  r.csv = {w.text(), report.bwt.text(), join(run_texts, " "), join(perm_texts, " "),
           report.perfect ? "true" : "false"};
  r.text = "bwt=" + report.bwt.text() + " runs=" + join(run_texts, ",") +
           " permutation=" + (report.permutation ? join(perm_texts, ",") : "-") +
           " perfect=" + (report.perfect ? "yes" : "no");
  return r;
}

Record record_closure(const Word& w) {
  const Word closed = palindromic_closure(w);
  Record r;
  r.object = json{{"word", w.text()}, {"closure", closed.text()}};
  r.csv = {w.text(), closed.text()};
  r.text = show(closed.text());
  return r;
}

Record record_pal(const Word& w) {
  const Word image = pal(w);
  Record r;
  r.object = json{{"directive", w.text()}, {"image", image.text()}};
  r.csv = {w.text(), image.text()};
  r.text = show(image.text());
  return r;
}

Record record_directive(const Word& w) {
  const auto directive = directive_of(w);
  Record r;
  r.object = json{{"word", w.text()},
                  {"directive", directive ? json(directive->text()) : json(nullptr)}};
  r.csv = {w.text(), directive ? directive->text() : "absent"};
  r.text = directive ? show(directive->text()) : "absent";
  return r;
}

Record record_factorize(const Word& w) {
  const auto factorization = palindromic_special_factorization(w);
  Record r;
  if (factorization) {
    json parts = json::array();
    for (const Word& part : factorization->parts) parts.push_back(part.text());
    r.object = json{{"word", w.text()},
                    {"factorization", json{{"separators", factorization->separators},
                                           {"parts", parts},
                                           {"pretty", factorization->pretty()}}}};
    r.csv = {w.text(), factorization->pretty()};
    r.text = factorization->pretty();
  } else {
    r.object = json{{"word", w.text()}, {"factorization", nullptr}};
    r.csv = {w.text(), "none"};
    r.text = "none";
  }
  return r;
}

Record record_check(const Word& w) {
  const bool via_factorization = is_pcl(w);
  const bool via_bwt = is_pcl_via_bwt(w);
  Record r;
  r.object = json{{"word", w.text()},
                  {"is_pcl", via_factorization},
                  {"is_pcl_via_bwt", via_bwt},
                  {"agree", via_factorization == via_bwt}};
  r.csv = {w.text(), via_factorization ? "true" : "false", via_bwt ? "true" : "false",
           via_factorization == via_bwt ? "true" : "false"};
  r.text = std::string("pcl=") + (via_factorization ? "yes" : "no") +
           " via_bwt=" + (via_bwt ? "yes" : "no") +
           " agree=" + (via_factorization == via_bwt ? "yes" : "no");
  return r;
}

Record record_membership(const RunConfig& cfg, const Word& w, const PclCatalog& catalog,
                         PalindromeSide side) {
  const MembershipVerdict verdict = membership(side, w, catalog);
  Record r;
  json object{{"side", to_string(side)},
              {"word", w.text()},
              {"status", to_string(verdict.status)}};
  object["witness"] = verdict.witness ? json(verdict.witness->text()) : json(nullptr);
  object["obstruction"] =
      verdict.status == MembershipStatus::NonMemberDecisive ? json(verdict.obstruction) : json(nullptr);
  object["bound"] = verdict.bound;
  r.object = std::move(object);
  r.csv = {to_string(side), w.text(), to_string(verdict.status),
           verdict.witness ? verdict.witness->text() : "",
           join(verdict.obstruction, " "), std::to_string(verdict.bound)};
  switch (verdict.status) {
    case MembershipStatus::Member:
      r.text = "Member witness=" + verdict.witness->text();
      break;
    case MembershipStatus::NonMemberDecisive:
      r.text = "NonMemberDecisive obstruction=" + join(verdict.obstruction, ",");
      break;
    case MembershipStatus::UnknownUpTo:
      r.text = "UnknownUpTo bound=" + std::to_string(cfg.max_len);
      break;
  }
  return r;
}

Record record_decompose(const Word& w, const WordInput& input) {
  std::optional<std::pair<AutomorphismName, Word>> step;
  try {
    step = decompose(w);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, describe_input(input) + ": " + e.what()};
  }
  Record r;
  if (step) {
    r.object = json{{"word", w.text()},
                    {"automorphism", to_string(step->first)},
                    {"preimage", step->second.text()}};
    r.csv = {w.text(), to_string(step->first), step->second.text()};
    r.text = to_string(step->first) + " " + step->second.text();
  } else {
    // Would contradict the decomposition theorem; report it verbatim.
    r.object = json{{"word", w.text()}, {"automorphism", nullptr}, {"preimage", nullptr}};
    r.csv = {w.text(), "none", ""};
    r.text = "none";
  }
  return r;
}

Record record_witness(const Word& w, const WordInput& input) {
  try {
    const Word witness = witness_from_directive(w);
    Record r;
    r.object = json{{"directive", w.text()}, {"witness", witness.text()}};
    r.csv = {w.text(), witness.text()};
    r.text = witness.text();
    return r;
  } catch (const std::invalid_argument& e) {
    throw CliError{2, describe_input(input) + ": " + e.what()};
  }
}

json make_stats(std::uint64_t words_checked, double elapsed_ms) {
  return json{{"words_checked", words_checked}, {"elapsed_ms", elapsed_ms}};
}

void emit_json(std::ostream& out, const json& envelope) { out << envelope.dump(2) << "\n"; }

int run_word_query(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const auto start = Clock::now();
  const std::vector<WordInput> inputs = gather_inputs(cfg, in);
  const bool batch = cfg.file.has_value();

  std::optional<PclCatalog> catalog;
  std::optional<PalindromeSide> side;
  if (cfg.subcommand == "membership") {
    std::string s = cfg.side.value_or("");
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "p1") side = PalindromeSide::P1;
    else if (s == "p2") side = PalindromeSide::P2;
    else throw CliError{2, "membership needs a side of p1 or p2"};
    catalog = enumerate_pcl(cfg.max_len, cfg.workers);
  }

  std::vector<std::string> csv_header;
  if (cfg.subcommand == "bwt") csv_header = {"word", "bwt"};
  else if (cfg.subcommand == "cluster") csv_header = {"word", "bwt", "runs", "permutation", "perfect"};
  else if (cfg.subcommand == "closure") csv_header = {"word", "closure"};
  else if (cfg.subcommand == "pal") csv_header = {"directive", "image"};
  else if (cfg.subcommand == "directive") csv_header = {"word", "directive"};
  else if (cfg.subcommand == "factorize") csv_header = {"word", "factorization"};
  else if (cfg.subcommand == "check") csv_header = {"word", "is_pcl", "is_pcl_via_bwt", "agree"};
  else if (cfg.subcommand == "membership")
    csv_header = {"side", "word", "status", "witness", "obstruction", "bound"};
  else if (cfg.subcommand == "decompose") csv_header = {"word", "automorphism", "preimage"};
  else if (cfg.subcommand == "witness") csv_header = {"directive", "witness"};

  std::vector<Record> records;
  records.reserve(inputs.size());
  for (const WordInput& input : inputs) {
    const Word w = build_word(cfg, input);
    try {
      if (cfg.subcommand == "bwt") records.push_back(record_bwt(w));
      else if (cfg.subcommand == "cluster") records.push_back(record_cluster(w));
      else if (cfg.subcommand == "closure") records.push_back(record_closure(w));
      else if (cfg.subcommand == "pal") records.push_back(record_pal(w));
      else if (cfg.subcommand == "directive") records.push_back(record_directive(w));
      else if (cfg.subcommand == "factorize") records.push_back(record_factorize(w));
      else if (cfg.subcommand == "check") records.push_back(record_check(w));
      else if (cfg.subcommand == "membership")
        records.push_back(record_membership(cfg, w, *catalog, *side));
      else if (cfg.subcommand == "decompose") records.push_back(record_decompose(w, input));
      else if (cfg.subcommand == "witness") records.push_back(record_witness(w, input));
      else throw CliError{2, "unknown subcommand '" + cfg.subcommand + "'"};
    } catch (const CliError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw CliError{2, describe_input(input) + ": " + e.what()};
    }
  }

  if (cfg.format == "json") {
    json results = json::array();
    for (const Record& r : records) results.push_back(r.object);
    json envelope{{"subcommand", cfg.subcommand},
                  {"bound", cfg.max_len},
                  {"status", "ok"},
                  {"results", results},
                  {"stats", make_stats(records.size(), ms_since(start))}};
    emit_json(out, envelope);
  } else if (cfg.format == "csv") {
    out << csv_row(csv_header) << "\n";
    for (const Record& r : records) out << csv_row(r.csv) << "\n";
  } else {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (batch) out << show(inputs[i].text) << "\t" << records[i].text << "\n";
      else out << records[i].text << "\n";
    }
  }
  return 0;
}

int run_enumerate(const RunConfig& cfg, std::ostream& out) {
  const auto start = Clock::now();
  const PclCatalog catalog = enumerate_pcl(cfg.max_len, cfg.workers);
  if (cfg.format == "json") {
    json results = json::array();
    for (const CatalogEntry& entry : catalog.entries) {
      results.push_back(json{{"word", entry.word.text()},
                             {"pi1", entry.factorization.parts[0].text()},
                             {"pi2", entry.factorization.parts[1].text()}});
    }
    json envelope{{"subcommand", "enumerate"},
                  {"bound", catalog.bound},
                  {"status", "ok"},
                  {"results", results},
                  {"stats", make_stats(catalog.entries.size(), ms_since(start))}};
    emit_json(out, envelope);
  } else if (cfg.format == "csv") {
    out << "word,pi1,pi2\n";
    for (const CatalogEntry& entry : catalog.entries) {
      out << csv_row({entry.word.text(), entry.factorization.parts[0].text(),
                      entry.factorization.parts[1].text()})
          << "\n";
    }
  } else {
    for (const CatalogEntry& entry : catalog.entries) {
      out << entry.word.text() << "\t" << entry.factorization.pretty() << "\n";
    }
  }
  return 0;
}

int run_sets(const RunConfig& cfg, std::ostream& out) {
  const auto start = Clock::now();
  const auto [p1, p2] = compute_sets(enumerate_pcl(cfg.max_len, cfg.workers));
  const auto slice_rows = [](const PalindromeSetSlice& slice) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [palindrome, witness] : slice.elements) {
      rows.emplace_back(palindrome.text(), witness.text());
    }
    return rows;
  };
  const auto p1_rows = slice_rows(p1);
  const auto p2_rows = slice_rows(p2);

  if (cfg.format == "json") {
    json results = json::array();
    for (const auto& [palindrome, witness] : p1_rows) {
      results.push_back(json{{"side", "P1"}, {"palindrome", palindrome}, {"witness", witness}});
    }
    for (const auto& [palindrome, witness] : p2_rows) {
      results.push_back(json{{"side", "P2"}, {"palindrome", palindrome}, {"witness", witness}});
    }
    json envelope{{"subcommand", "sets"},
                  {"bound", cfg.max_len},
                  {"status", "ok"},
                  {"results", results},
                  {"stats", make_stats(p1_rows.size() + p2_rows.size(), ms_since(start))}};
    emit_json(out, envelope);
  } else if (cfg.format == "csv") {
    out << "side,palindrome,witness\n";
    for (const auto& [palindrome, witness] : p1_rows) {
      out << csv_row({"P1", palindrome, witness}) << "\n";
    }
    for (const auto& [palindrome, witness] : p2_rows) {
      out << csv_row({"P2", palindrome, witness}) << "\n";
    }
  } else {
    for (const auto& [palindrome, witness] : p1_rows) {
      out << "P1 " << show(palindrome) << " witness=" << witness << "\n";
    }
    for (const auto& [palindrome, witness] : p2_rows) {
      out << "P2 " << show(palindrome) << " witness=" << witness << "\n";
    }
  }
  return 0;
}

json claim_object(const VerificationReport& report) {
  return json{{"claim", report.claim},
              {"bound", report.bound},
              {"status", to_string(report.status)},
              {"counterexamples", report.counterexamples},
              {"stats", make_stats(report.words_checked, report.elapsed_ms)}};
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.claim) {
    throw CliError{2, "verify needs --claim (one of " + join(claim_names(), ", ") + ", or all)"};
  }
  std::vector<std::string> claims;
  if (*cfg.claim == "all") {
    claims = claim_names();
  } else {
    if (std::find(claim_names().begin(), claim_names().end(), *cfg.claim) ==
        claim_names().end()) {
      throw CliError{2, "unknown claim '" + *cfg.claim + "'"};
    }
    claims = {*cfg.claim};
  }

  std::vector<VerificationReport> reports;
  reports.reserve(claims.size());
  for (const std::string& claim : claims) {
    reports.push_back(verify_claim(claim, cfg.max_len, cfg.workers));
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.status != VerificationReport::Status::Pass;
  });

  if (cfg.format == "json") {
    if (reports.size() == 1) {
      emit_json(out, claim_object(reports.front()));
    } else {
      json results = json::array();
      std::uint64_t checked = 0;
      double elapsed = 0.0;
      for (const auto& r : reports) {
        results.push_back(claim_object(r));
        checked += r.words_checked;
        elapsed += r.elapsed_ms;
      }
      json envelope{{"claim", "all"},
                    {"bound", cfg.max_len},
                    {"status", failed ? "counterexample" : "pass"},
                    {"results", results},
                    {"stats", make_stats(checked, elapsed)}};
      emit_json(out, envelope);
    }
  } else if (cfg.format == "csv") {
    out << "claim,bound,status,words_checked,counterexamples\n";
    for (const auto& r : reports) {
      out << csv_row({r.claim, std::to_string(r.bound), to_string(r.status),
                      std::to_string(r.words_checked), join(r.counterexamples, " ")})
          << "\n";
    }
  } else {
    for (const auto& r : reports) {
      out << r.claim << ": " << to_string(r.status) << " (bound " << r.bound << ", "
          << r.words_checked << " checked)\n";
      for (const std::string& cx : r.counterexamples) {
        out << "  counterexample: " << cx << "\n";
      }
    }
  }
  return failed ? 1 : 0;
}

}  // namespace

int run(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    validate_config(cfg);
    if (cfg.subcommand == "verify") return run_verify(cfg, out);
    if (cfg.subcommand == "enumerate") return run_enumerate(cfg, out);
    if (cfg.subcommand == "sets") return run_sets(cfg, out);
    return run_word_query(cfg, in, out);
  } catch (const CliError& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Burrows-Wheeler clustering, palindromization and perfectly "
               "clustering Lyndon word toolkit"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-len", cfg.max_len, "length bound for enumeration and search")
        ->capture_default_str();
    auto* alpha = sub->add_option("--alphabet", cfg.alphabet, "ordered alphabet symbols")
                      ->capture_default_str();
    sub->add_option("--format", cfg.format, "output format: text, json or csv")
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)")
        ->capture_default_str();
    return alpha;
  };

  std::vector<CLI::Option*> alphabet_options;
  const auto add_word_subcommand = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    alphabet_options.push_back(add_common(sub));
    sub->add_option("word", cfg.word, "input word");
    sub->add_option("--file", cfg.file, "read words from a file, one per line ('-' = stdin)");
    return sub;
  };

  add_word_subcommand("bwt", "Burrows-Wheeler transform of a word");
  add_word_subcommand("cluster", "BWT runs, clustering permutation and perfect flag");
  add_word_subcommand("closure", "right palindromic closure");
  add_word_subcommand("pal", "iterated palindromization of a directive word");
  add_word_subcommand("directive", "directive word of an iterated palindrome");
  add_word_subcommand("factorize", "palindromic special factorization");
  add_word_subcommand("check", "both perfectly-clustering-Lyndon classifiers");
  CLI::App* membership_cmd =
      add_word_subcommand("membership", "bounded P1/P2 membership with certificates");
  membership_cmd->add_option("--side", cfg.side, "which set: p1 or p2");
  add_word_subcommand("decompose", "shorter perfectly clustering preimage under an automorphism");
  add_word_subcommand("witness", "perfectly clustering witness built from a directive word");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "catalog of perfectly clustering "
                                                            "Lyndon words up to --max-len");
  alphabet_options.push_back(add_common(enumerate_cmd));
  CLI::App* sets_cmd = app.add_subcommand("sets", "P1 and P2 slices with shortest witnesses");
  alphabet_options.push_back(add_common(sets_cmd));
  CLI::App* verify_cmd = app.add_subcommand("verify", "bounded verification of a named claim");
  alphabet_options.push_back(add_common(verify_cmd));
  verify_cmd->add_option("--claim", cfg.claim,
                         "claim id (" + join(claim_names(), ", ") + ", or all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* active = app.get_subcommands().front();
  cfg.subcommand = active->get_name();
  for (CLI::Option* option : alphabet_options) {
    if (option->count() > 0) cfg.alphabet_explicit = true;
  }
  return run(cfg, in, out, err);
}

}  // namespace pcw::cli
