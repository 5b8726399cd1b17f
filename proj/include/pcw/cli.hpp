#pragma once

// Command-line surface. Subcommands either answer single-word queries (from
// an argument, a file, or stdin via --file -) or drive the enumeration and
// claim-verification engines. Reports go to stdout in text, json or csv;
// diagnostics go to stderr.

#include <iosfwd>
#include <optional>
#include <string>

namespace pcw::cli {

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> word;   // positional input
  std::optional<std::string> side;   // membership: p1 | p2
  std::optional<std::string> file;   // --file PATH, "-" means stdin
  std::optional<std::string> claim;  // verify: claim id or "all"
  int max_len = 12;
  std::string alphabet = "abc";
  bool alphabet_explicit = false;
  std::string format = "text";  // text | json | csv
  int workers = 0;
};

// Exit code 0 on success/pass, 1 when a verification counterexample is
// found, 2 on usage or input errors.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to run().
int main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace pcw::cli
