#pragma once

#include <variant>

#include "abdim/report_json.hpp"

namespace abdim {

// Syntax-level polynomial: resolved against the session ring at execution.
struct SynTerm {
  long long num = 1;
  long long den = 1;
  std::vector<std::pair<std::string, int>> powers;
};
struct SynPoly {
  std::vector<SynTerm> terms;
};

struct RingDef {
  std::string name;
  bool rational_field = false;
  long long char_p = 0;
  std::vector<std::string> vars;
  std::vector<SynPoly> gens;
};

struct ModuleDef {
  enum Kind { Coker, K, R, Syz, Dual, Sum } kind = Coker;
  std::string name;
  std::vector<std::vector<SynPoly>> coker;
  int syz_n = 0;
  std::string arg1, arg2;
};

struct Command {
  enum Kind {
    Resolve,
    Betti,
    Ext,
    Gdim,
    Abdim,
    Arc,
    Period,
    Socle,
    Gorenstein,
    ExampleJs
  } kind = Betti;
  std::vector<std::string> names;
  std::vector<long long> ints;
  std::vector<std::pair<std::string, std::string>> flags;
};

using Stmt = std::variant<RingDef, ModuleDef, Command>;

struct SessionAst {
  std::vector<Stmt> stmts;
};

struct Diagnostic {
  int line = 0, col = 0;
  std::string message;
  int stmt_index = -1;  // semantic errors carry the statement index
};

struct ParseResult {
  std::optional<SessionAst> ast;
  Diagnostic error;
  bool ok() const { return ast.has_value(); }
};

// Total: malformed input yields a diagnostic with position and expectation.
ParseResult parse_session(const std::string& text);

std::string print_session(const SessionAst& ast);

struct ExecFlags {
  std::uint64_t seed = 0;
  int bound = 20;
  bool quiet = false;
};

struct ExecResult {
  int exit_code = 0;  // 0 ok, 1 computation/semantic error
  std::string text;
  Json json;
};

// Runs statements in order; the first hard error is embedded in the report
// and stops the session.
ExecResult execute(const SessionAst& ast, const ExecFlags& flags);

}  // namespace abdim
