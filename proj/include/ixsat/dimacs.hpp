// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ixsat/types.hpp"

namespace ixsat {

struct ParseMessage {
  int line = 0;
  std::string text;
};

// A formula is produced iff errors is empty; warnings never block.
struct ParseResult {
  std::optional<Formula> formula;
  std::vector<ParseMessage> warnings;
  std::vector<ParseMessage> errors;
  bool ok() const { return formula.has_value(); }
};

// DIMACS CNF: comment lines (c ...), one header (p cnf <n> <m>), clauses as
// nonzero integers closed by 0, free to span lines. Deviations that real
// corpora contain are warnings (count mismatch, duplicate literals, '%' or
// lone-0 end markers, unterminated last clause); tautological clauses,
// out-of-range variables and malformed tokens are errors. Never throws on
// any byte input.
ParseResult parse_dimacs(std::string_view text);

ParseResult parse_dimacs_file(const std::string& path);

// Canonical form: header, one clause per line, sorted literals, 0 terminator,
// trailing newline. parse(write(f)) reproduces f exactly.
std::string write_dimacs(const Formula& f);
void write_dimacs_file(const Formula& f, const std::string& path);

}  // namespace ixsat
