// SPDX-License-Identifier: Apache-2.0
#include "ixsat/dimacs.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ixsat {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

void msg(std::vector<ParseMessage>& out, int line, std::string text) {
  out.push_back({line, std::move(text)});
}

struct Parser {
  ParseResult res;
  bool have_header = false;
  long long n = 0, m_declared = 0;
  std::vector<Clause> clauses;
  std::vector<Lit> buf;  // open clause, may span lines
  int clause_start_line = 0;

  void close_clause(int line) {
    // sort by variable, report duplicates once, reject tautologies
    std::sort(buf.begin(), buf.end(),
              [](Lit a, Lit b) { return var_of(a) < var_of(b); });
    Clause c;
    bool dup_warned = false;
    bool taut = false;
    for (Lit l : buf) {
      if (!c.empty() && var_of(c.back()) == var_of(l)) {
        if (c.back() == l) {
          if (!dup_warned)
            msg(res.warnings, line,
                "duplicate literal " + std::to_string(l) + " dropped");
          dup_warned = true;
          continue;
        }
        msg(res.errors, line,
            "tautological clause: variable " + std::to_string(var_of(l)) +
                " appears with both signs");
        taut = true;
        break;
      }
      c.push_back(l);
    }
    if (!taut) clauses.push_back(std::move(c));
    buf.clear();
  }

  void literal(long long v, int line) {
    if (!have_header) {
      msg(res.errors, line, "clause data before the p cnf header");
      have_header = true;  // report once; keep scanning for more diagnostics
      n = 0;
    }
    if (v > n || -v > n) {
      msg(res.errors, line,
          "variable " + std::to_string(v < 0 ? -v : v) +
              " out of range, header said n=" + std::to_string(n));
      return;
    }
    if (buf.empty()) clause_start_line = line;
    buf.push_back((Lit)v);
  }

  void zero(int line) {
    if (buf.empty() && have_header &&
        (long long)clauses.size() >= m_declared) {
      msg(res.warnings, line, "stray 0 after all declared clauses; ignored");
      return;
    }
    if (!have_header) {
      msg(res.errors, line, "clause data before the p cnf header");
      have_header = true;
      n = 0;
    }
    close_clause(line);
  }

  void finish(int line) {
    if (!buf.empty()) {
      msg(res.warnings, clause_start_line,
          "last clause not closed by 0; accepted as written");
      close_clause(line);
    }
    if (!have_header) {
      msg(res.errors, line, "missing p cnf header");
    } else if ((long long)clauses.size() != m_declared) {
      msg(res.warnings, line,
          "header declared " + std::to_string(m_declared) + " clauses, found " +
              std::to_string(clauses.size()) + "; using the actual count");
    }
    if (res.errors.empty()) {
      Formula f;
      f.n = (int)n;
      f.clauses = std::move(clauses);
      res.formula = std::move(f);
    }
  }
};

std::optional<long long> parse_int(std::string_view tok) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace

ParseResult parse_dimacs(std::string_view text) {
  Parser ps;
  int line = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view ln = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line;

    size_t i = 0;
    while (i < ln.size() && is_space(ln[i])) ++i;
    if (i == ln.size()) continue;
    const char first = ln[i];
    if (first == 'c') continue;
    if (first == '%') {
      msg(ps.res.warnings, line, "'%' end marker; rest of input ignored");
      break;
    }
    if (first == 'p') {
      std::vector<std::string_view> toks;
      size_t j = i;
      while (j < ln.size()) {
        while (j < ln.size() && is_space(ln[j])) ++j;
        size_t s = j;
        while (j < ln.size() && !is_space(ln[j])) ++j;
        if (j > s) toks.push_back(ln.substr(s, j - s));
      }
      if (ps.have_header) {
        msg(ps.res.errors, line, "second p header");
      } else if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf") {
        msg(ps.res.errors, line, "malformed header, expected p cnf <n> <m>");
        ps.have_header = true;  // avoid cascading clause-before-header errors
        ps.n = 0;
      } else {
        auto nv = parse_int(toks[2]);
        auto mv = parse_int(toks[3]);
        if (!nv || !mv || *nv < 0 || *mv < 0 || *nv > INT32_MAX) {
          msg(ps.res.errors, line, "malformed header counts");
          ps.have_header = true;
          ps.n = 0;
        } else {
          ps.have_header = true;
          ps.n = *nv;
          ps.m_declared = *mv;
        }
      }
      continue;
    }

    // literal tokens
    size_t j = i;
    while (j < ln.size()) {
      while (j < ln.size() && is_space(ln[j])) ++j;
      size_t s = j;
      while (j < ln.size() && !is_space(ln[j])) ++j;
      if (j == s) break;
      std::string_view tok = ln.substr(s, j - s);
      auto v = parse_int(tok);
      if (!v) {
        msg(ps.res.errors, line,
            "malformed token '" + std::string(tok.substr(0, 32)) + "'");
        continue;
      }
      if (*v == 0)
        ps.zero(line);
      else
        ps.literal(*v, line);
    }
  }
  ps.finish(line);
  return ps.res;
}

ParseResult parse_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ParseResult r;
    msg(r.errors, 0, "cannot open '" + path + "'");
    return r;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_dimacs(ss.str());
}

std::string write_dimacs(const Formula& f) {
  std::string out = "p cnf " + std::to_string(f.n) + " " +
                    std::to_string(f.clauses.size()) + "\n";
  for (const Clause& c : f.clauses) {
    for (Lit l : c) {
      out += std::to_string(l);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

void write_dimacs_file(const Formula& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << write_dimacs(f);
}

}  // namespace ixsat
