#include "abdim/session.hpp"

#include <map>
#include <sstream>

namespace abdim {

namespace {

enum class Tok {
  End,
  Sep,
  Ident,
  Int,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  Eq,
  Slash,
  Caret,
  Star,
  Plus,
  Minus,
  PlusPlus,
  Flag
};

struct Token {
  Tok kind;
  std::string text;
  long long ival = 0;
  int line = 1, col = 1;
};

struct ParseFail {
  int line, col;
  std::string message;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string t, long long v = 0) {
    out.push_back({k, std::move(t), v, line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      push(Tok::Sep, "\n");
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ';') {
      push(Tok::Sep, ";");
      ++i;
      ++col;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string num = text.substr(i, j - i);
      long long v = 0;
      try {
        v = std::stoll(num);
      } catch (...) {
        throw ParseFail{line, col, "integer literal out of range"};
      }
      push(Tok::Int, num, v);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      push(Tok::Ident, text.substr(i, j - i));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '-') {
      size_t j = i + 2;
      size_t start = j;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '-' || text[j] == '_'))
        ++j;
      if (j == start) throw ParseFail{line, col, "flag name expected after '--'"};
      push(Tok::Flag, text.substr(start, j - start));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '+' && i + 1 < text.size() && text[i + 1] == '+') {
      push(Tok::PlusPlus, "++");
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '=': k = Tok::Eq; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '*': k = Tok::Star; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      default:
        throw ParseFail{line, col,
                        std::string("unexpected character '") + c + "'"};
    }
    push(k, std::string(1, c));
    ++i;
    ++col;
  }
  out.push_back({Tok::End, "", 0, line, col});
  return out;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SessionAst parse() {
    SessionAst ast;
    skip_seps();
    while (peek().kind != Tok::End) {
      ast.stmts.push_back(parse_stmt());
      if (peek().kind != Tok::End && peek().kind != Tok::Sep)
        fail("expected end of statement (newline or ';')");
      skip_seps();
    }
    return ast;
  }

private:
  std::vector<Token> toks_;
  size_t pos_ = 0;

  const Token& peek(int ahead = 0) const {
    size_t p = pos_ + ahead;
    return p < toks_.size() ? toks_[p] : toks_.back();
  }
  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      take();
      return true;
    }
    return false;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail("expected " + what);
    return take();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseFail{peek().line, peek().col, msg};
  }
  void skip_seps() {
    while (peek().kind == Tok::Sep) take();
  }

  std::string expect_name() { return expect(Tok::Ident, "a name").text; }
  long long expect_int() { return expect(Tok::Int, "an integer").ival; }

  Stmt parse_stmt() {
    if (peek().kind != Tok::Ident)
      fail("expected a statement keyword (ring, module, or a command)");
    const std::string& kw = peek().text;
    if (kw == "ring") return parse_ringdef();
    if (kw == "module") return parse_moduledef();
    return parse_command();
  }

  RingDef parse_ringdef() {
    take();  // ring
    RingDef r;
    r.name = expect_name();
    expect(Tok::Eq, "'='");
    Token f = expect(Tok::Ident, "a field (QQ or GF(p))");
    if (f.text == "QQ") {
      r.rational_field = true;
    } else if (f.text == "GF") {
      expect(Tok::LParen, "'('");
      r.char_p = expect_int();
      expect(Tok::RParen, "')'");
    } else {
      fail("expected field QQ or GF(p)");
    }
    expect(Tok::LBrack, "'['");
    r.vars.push_back(expect_name());
    while (accept(Tok::Comma)) r.vars.push_back(expect_name());
    expect(Tok::RBrack, "']'");
    expect(Tok::Slash, "'/'");
    expect(Tok::LParen, "'('");
    r.gens.push_back(parse_poly());
    while (accept(Tok::Comma)) r.gens.push_back(parse_poly());
    expect(Tok::RParen, "')'");
    return r;
  }

  ModuleDef parse_moduledef() {
    take();  // module
    ModuleDef m;
    m.name = expect_name();
    expect(Tok::Eq, "'='");
    if (peek().kind != Tok::Ident)
      fail("expected coker, k, R, syz, dual, or a module name");
    std::string kw = peek().text;
    if (kw == "coker") {
      take();
      m.kind = ModuleDef::Coker;
      m.coker = parse_matrix();
    } else if (kw == "k") {
      take();
      m.kind = ModuleDef::K;
    } else if (kw == "R") {
      take();
      m.kind = ModuleDef::R;
    } else if (kw == "syz") {
      take();
      m.kind = ModuleDef::Syz;
      m.syz_n = static_cast<int>(expect_int());
      m.arg1 = expect_name();
    } else if (kw == "dual") {
      take();
      m.kind = ModuleDef::Dual;
      m.arg1 = expect_name();
    } else {
      m.kind = ModuleDef::Sum;
      m.arg1 = expect_name();
      expect(Tok::PlusPlus, "'++'");
      m.arg2 = expect_name();
    }
    return m;
  }

  std::vector<std::vector<SynPoly>> parse_matrix() {
    std::vector<std::vector<SynPoly>> rows;
    expect(Tok::LBrack, "'[' opening the matrix");
    rows.push_back(parse_row());
    while (accept(Tok::Comma)) rows.push_back(parse_row());
    expect(Tok::RBrack, "']' closing the matrix");
    return rows;
  }

  std::vector<SynPoly> parse_row() {
    std::vector<SynPoly> row;
    expect(Tok::LBrack, "'[' opening a matrix row");
    row.push_back(parse_poly());
    while (accept(Tok::Comma)) row.push_back(parse_poly());
    expect(Tok::RBrack, "']' closing a matrix row");
    return row;
  }

  SynPoly parse_poly() {
    SynPoly p;
    long long sign = accept(Tok::Minus) ? -1 : 1;
    p.terms.push_back(parse_term(sign));
    for (;;) {
      if (accept(Tok::Plus))
        sign = 1;
      else if (accept(Tok::Minus))
        sign = -1;
      else
        break;
      p.terms.push_back(parse_term(sign));
    }
    return p;
  }

  SynTerm parse_term(long long sign) {
    SynTerm t;
    t.num = sign;
    bool saw_factor = false;
    if (peek().kind == Tok::Int) {
      t.num *= expect_int();
      if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
        take();
        t.den = expect_int();
        if (t.den == 0) fail("zero denominator");
      }
      while (accept(Tok::Star)) parse_factor(t);
      return t;
    }
    parse_factor(t);
    saw_factor = true;
    while (accept(Tok::Star)) parse_factor(t);
    (void)saw_factor;
    return t;
  }

  void parse_factor(SynTerm& t) {
    std::string name = expect(Tok::Ident, "a variable name").text;
    int exp = 1;
    if (accept(Tok::Caret)) exp = static_cast<int>(expect_int());
    t.powers.emplace_back(std::move(name), exp);
  }

  Command parse_command() {
    Command c;
    std::string kw = take().text;
    if (kw == "resolve") {
      c.kind = Command::Resolve;
      c.names.push_back(expect_name());
      c.ints.push_back(expect_int());
    } else if (kw == "betti") {
      c.kind = Command::Betti;
      c.names.push_back(expect_name());
    } else if (kw == "ext") {
      c.kind = Command::Ext;
      c.names.push_back(expect_name());
      c.names.push_back(expect_name());
      c.ints.push_back(expect_int());
      c.ints.push_back(expect_int());
    } else if (kw == "gdim") {
      c.kind = Command::Gdim;
      c.names.push_back(expect_name());
    } else if (kw == "abdim") {
      c.kind = Command::Abdim;
      c.names.push_back(expect_name());
    } else if (kw == "arc") {
      c.kind = Command::Arc;
      c.names.push_back(expect_name());
    } else if (kw == "period") {
      c.kind = Command::Period;
      c.names.push_back(expect_name());
      c.ints.push_back(expect_int());
    } else if (kw == "socle") {
      c.kind = Command::Socle;
    } else if (kw == "gorenstein") {
      c.kind = Command::Gorenstein;
    } else if (kw == "example") {
      Token sub = expect(Tok::Ident, "an example name");
      if (sub.text != "js") fail("unknown example '" + sub.text + "'");
      c.kind = Command::ExampleJs;
      while (peek().kind == Tok::Flag) {
        std::string fname = take().text;
        std::string fval;
        if (peek().kind == Tok::Ident) {
          fval = take().text;
        } else if (peek().kind == Tok::Minus || peek().kind == Tok::Int) {
          bool neg = accept(Tok::Minus);
          long long v = expect_int();
          fval = (neg ? "-" : "") + std::to_string(v);
          if (peek().kind == Tok::Slash && peek(1).kind == Tok::Int) {
            take();
            fval += "/" + std::to_string(expect_int());
          }
        } else {
          fail("expected a value after --" + fname);
        }
        c.flags.emplace_back(std::move(fname), std::move(fval));
      }
    } else {
      fail("unknown command '" + kw +
           "' (expected resolve, betti, ext, gdim, abdim, arc, period, socle, "
           "gorenstein, or example)");
    }
    return c;
  }
};

std::string term_str(const SynTerm& t, bool leading) {
  long long n = t.num;
  std::string s;
  if (leading && n < 0) s += "-";
  long long an = n < 0 ? -n : n;
  std::string coeff = std::to_string(an);
  if (t.den != 1) coeff += "/" + std::to_string(t.den);
  std::string vars;
  for (const auto& [v, e] : t.powers) {
    if (!vars.empty()) vars += "*";
    vars += v;
    if (e != 1) vars += "^" + std::to_string(e);
  }
  if (vars.empty()) return s + coeff;
  if (an == 1 && t.den == 1) return s + vars;
  return s + coeff + "*" + vars;
}

std::string poly_str(const SynPoly& p) {
  std::string s;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    if (i == 0) {
      s += term_str(p.terms[i], true);
    } else {
      s += p.terms[i].num < 0 ? " - " : " + ";
      s += term_str(p.terms[i], false);
    }
  }
  return s;
}

std::string matrix_str(const std::vector<std::vector<SynPoly>>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ", ";
      s += poly_str(m[i][j]);
    }
    s += "]";
  }
  return s + "]";
}

struct StmtPrinter {
  std::string operator()(const RingDef& r) const {
    std::string s = "ring " + r.name + " = ";
    s += r.rational_field ? "QQ" : "GF(" + std::to_string(r.char_p) + ")";
    s += "[";
    for (size_t i = 0; i < r.vars.size(); ++i) {
      if (i) s += ",";
      s += r.vars[i];
    }
    s += "] / (";
    for (size_t i = 0; i < r.gens.size(); ++i) {
      if (i) s += ", ";
      s += poly_str(r.gens[i]);
    }
    return s + ")";
  }
  std::string operator()(const ModuleDef& m) const {
    std::string s = "module " + m.name + " = ";
    switch (m.kind) {
      case ModuleDef::Coker: return s + "coker " + matrix_str(m.coker);
      case ModuleDef::K: return s + "k";
      case ModuleDef::R: return s + "R";
      case ModuleDef::Syz:
        return s + "syz " + std::to_string(m.syz_n) + " " + m.arg1;
      case ModuleDef::Dual: return s + "dual " + m.arg1;
      case ModuleDef::Sum: return s + m.arg1 + " ++ " + m.arg2;
    }
    return s;
  }
  std::string operator()(const Command& c) const {
    switch (c.kind) {
      case Command::Resolve:
        return "resolve " + c.names[0] + " " + std::to_string(c.ints[0]);
      case Command::Betti: return "betti " + c.names[0];
      case Command::Ext:
        return "ext " + c.names[0] + " " + c.names[1] + " " +
               std::to_string(c.ints[0]) + " " + std::to_string(c.ints[1]);
      case Command::Gdim: return "gdim " + c.names[0];
      case Command::Abdim: return "abdim " + c.names[0];
      case Command::Arc: return "arc " + c.names[0];
      case Command::Period:
        return "period " + c.names[0] + " " + std::to_string(c.ints[0]);
      case Command::Socle: return "socle";
      case Command::Gorenstein: return "gorenstein";
      case Command::ExampleJs: {
        std::string s = "example js";
        for (const auto& [f, v] : c.flags) s += " --" + f + " " + v;
        return s;
      }
    }
    return "";
  }
};

struct ExecError {
  int stmt_index;
  std::string message;
};

struct ExecState {
  std::optional<FieldCtx> ctx;
  AlgebraPtr alg;
  std::string ring_name;
  std::map<std::string, int> var_index;
  std::map<std::string, FPModule> modules;
  std::map<std::string, FreeResolution> resolutions;
};

Poly to_poly(const ExecState& st, const SynPoly& sp, int stmt_idx) {
  const FieldCtx& ctx = *st.ctx;
  int nv = static_cast<int>(st.var_index.size());
  Poly p(ctx, nv);
  for (const SynTerm& t : sp.terms) {
    Monomial m = Monomial::one(nv);
    for (const auto& [v, e] : t.powers) {
      auto it = st.var_index.find(v);
      if (it == st.var_index.end())
        throw ExecError{stmt_idx, "undefined variable '" + v + "'"};
      m.e[it->second] += e;
    }
    p.add_term(m, ctx.from_fraction(t.num, t.den));
  }
  return p;
}

const FPModule& get_module(const ExecState& st, const std::string& name,
                           int idx) {
  auto it = st.modules.find(name);
  if (it == st.modules.end())
    throw ExecError{idx, "undefined module '" + name + "'"};
  return it->second;
}

const FreeResolution& get_resolution(ExecState& st, const std::string& name,
                                     int len, int idx) {
  auto it = st.resolutions.find(name);
  if (it == st.resolutions.end() || it->second.length() < len) {
    FreeResolution res = minimal_free_resolution(get_module(st, name, idx), len);
    it = st.resolutions.insert_or_assign(name, std::move(res)).first;
  }
  return it->second;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

ParseResult parse_session(const std::string& text) {
  ParseResult r;
  try {
    Parser p(lex(text));
    r.ast = p.parse();
  } catch (const ParseFail& f) {
    r.error = Diagnostic{f.line, f.col, f.message, -1};
  }
  return r;
}

std::string print_session(const SessionAst& ast) {
  std::string out;
  for (const Stmt& s : ast.stmts) {
    out += std::visit(StmtPrinter{}, s);
    out += "\n";
  }
  return out;
}

ExecResult execute(const SessionAst& ast, const ExecFlags& flags) {
  ExecResult out;
  out.json["schema_version"] = 1;
  out.json["seed"] = flags.seed;
  Json results = Json::array();
  ExecState st;
  std::ostringstream text;

  auto need_ring = [&](int idx) {
    if (!st.alg) throw ExecError{idx, "no ring defined yet"};
  };

  for (size_t idx = 0; idx < ast.stmts.size(); ++idx) {
    int i = static_cast<int>(idx);
    try {
      const Stmt& stmt = ast.stmts[idx];
      if (std::holds_alternative<RingDef>(stmt)) {
        const RingDef& r = std::get<RingDef>(stmt);
        if (st.alg)
          throw ExecError{i, "a ring is already defined (one ring per session)"};
        try {
          st.ctx = r.rational_field ? FieldCtx::rationals()
                                    : FieldCtx::prime_field(
                                          static_cast<std::uint64_t>(r.char_p));
        } catch (const std::exception& e) {
          throw ExecError{i, e.what()};
        }
        for (size_t v = 0; v < r.vars.size(); ++v) {
          if (st.var_index.count(r.vars[v]))
            throw ExecError{i, "duplicate variable '" + r.vars[v] + "'"};
          st.var_index[r.vars[v]] = static_cast<int>(v);
        }
        std::vector<Poly> gens;
        for (const SynPoly& sp : r.gens) gens.push_back(to_poly(st, sp, i));
        st.alg = build_algebra(r.vars, gens, *st.ctx);
        st.ring_name = r.name;
        Json e;
        e["statement"] = i;
        e["ring"] = r.name;
        e["field"] = st.ctx->describe();
        e["dim"] = st.alg->dim();
        results.push_back(std::move(e));
        text << "ring " << r.name << ": " << st.ctx->describe()
             << ", dim = " << st.alg->dim() << "\n";
      } else if (std::holds_alternative<ModuleDef>(stmt)) {
        const ModuleDef& m = std::get<ModuleDef>(stmt);
        need_ring(i);
        if (st.modules.count(m.name))
          throw ExecError{i, "module '" + m.name + "' is already defined"};
        std::optional<FPModule> M;
        switch (m.kind) {
          case ModuleDef::Coker: {
            size_t cols = m.coker.empty() ? 0 : m.coker[0].size();
            for (const auto& row : m.coker)
              if (row.size() != cols)
                throw ExecError{i, "ragged presentation matrix"};
            AlgMatrix P = alg_zero_matrix(*st.alg, static_cast<int>(m.coker.size()),
                                          static_cast<int>(cols));
            for (size_t r2 = 0; r2 < m.coker.size(); ++r2)
              for (size_t c2 = 0; c2 < cols; ++c2)
                P.at(static_cast<int>(r2), static_cast<int>(c2)) =
                    st.alg->element_from_poly(to_poly(st, m.coker[r2][c2], i));
            M = FPModule(st.alg, std::move(P));
            break;
          }
          case ModuleDef::K: M = FPModule::residue_field(st.alg); break;
          case ModuleDef::R: M = FPModule::free_module(st.alg, 1); break;
          case ModuleDef::Syz:
            M = syzygy(get_module(st, m.arg1, i), m.syz_n);
            break;
          case ModuleDef::Dual: M = dual(get_module(st, m.arg1, i)); break;
          case ModuleDef::Sum:
            M = direct_sum(get_module(st, m.arg1, i), get_module(st, m.arg2, i));
            break;
        }
        Json e;
        e["statement"] = i;
        e["module"] = m.name;
        e["kdim"] = M->kdim();
        e["min_gens"] = M->min_gens();
        results.push_back(std::move(e));
        text << "module " << m.name << ": kdim = " << M->kdim()
             << ", min_gens = " << M->min_gens() << "\n";
        st.modules.emplace(m.name, std::move(*M));
      } else {
        const Command& c = std::get<Command>(stmt);
        need_ring(i);
        Json e;
        e["statement"] = i;
        switch (c.kind) {
          case Command::Resolve: {
            int n = static_cast<int>(c.ints[0]);
            const FreeResolution& res = get_resolution(st, c.names[0], n, i);
            std::vector<int> betti(res.betti.begin(), res.betti.begin() + n + 1);
            e["command"] = "resolve";
            e["module"] = c.names[0];
            e["betti"] = betti;
            text << "resolve " << c.names[0] << ": betti = " << join_ints(betti)
                 << "\n";
            break;
          }
          case Command::Betti: {
            const FreeResolution& res =
                get_resolution(st, c.names[0], flags.bound, i);
            std::vector<int> betti(res.betti.begin(),
                                   res.betti.begin() + flags.bound + 1);
            e["command"] = "betti";
            e["module"] = c.names[0];
            e["betti"] = betti;
            text << "betti " << c.names[0] << ": " << join_ints(betti) << "\n";
            break;
          }
          case Command::Ext: {
            int lo = static_cast<int>(c.ints[0]), hi = static_cast<int>(c.ints[1]);
            if (lo < 0 || lo > hi) throw ExecError{i, "ext: need 0 <= lo <= hi"};
            const FreeResolution& res =
                get_resolution(st, c.names[0], hi + 1, i);
            ExtTable t = ext_table(res, get_module(st, c.names[1], i), lo, hi);
            e["command"] = "ext";
            e["source"] = c.names[0];
            e["target"] = c.names[1];
            e["table"] = to_json(t);
            text << "ext " << c.names[0] << " " << c.names[1] << " [" << lo
                 << ".." << hi << "]: " << join_ints(t.dims) << "\n";
            break;
          }
          case Command::Gdim: {
            GdimVerdict v = g_dimension(get_module(st, c.names[0], i),
                                        flags.bound, std::nullopt, std::nullopt,
                                        flags.seed);
            e["command"] = "gdim";
            e["module"] = c.names[0];
            e["result"] = to_json(v);
            text << "gdim " << c.names[0] << ": " << gkind_name(v.kind) << "\n";
            break;
          }
          case Command::Abdim: {
            ABConfig cfg;
            cfg.bound = flags.bound;
            cfg.seed = flags.seed;
            ABdimVerdict v = ab_dimension(get_module(st, c.names[0], i), cfg);
            e["command"] = "abdim";
            e["module"] = c.names[0];
            e["result"] = to_json(v);
            text << "abdim " << c.names[0] << ": " << abkind_name(v.kind);
            if (v.period) text << " (period " << *v.period << ")";
            text << "\n";
            break;
          }
          case Command::Arc: {
            ArcReport r = arc_check(get_module(st, c.names[0], i), flags.bound);
            e["command"] = "arc";
            e["module"] = c.names[0];
            e["result"] = to_json(r);
            text << "arc " << c.names[0]
                 << ": self_ext_zero=" << (r.self_ext_window_zero ? "yes" : "no")
                 << " free=" << (r.free_module ? "yes" : "no")
                 << " consistent=" << (r.consistent ? "yes" : "no")
                 << " ext1(M,syz M)=" << r.syzygy_ext1 << "\n";
            break;
          }
          case Command::Period: {
            auto cert = detect_periodicity(get_module(st, c.names[0], i),
                                           static_cast<int>(c.ints[0]), 32,
                                           flags.seed);
            e["command"] = "period";
            e["module"] = c.names[0];
            if (cert)
              e["period"] = cert->period;
            else
              e["period"] = nullptr;
            text << "period " << c.names[0] << ": "
                 << (cert ? std::to_string(cert->period) : "none certified")
                 << "\n";
            break;
          }
          case Command::Socle: {
            int dim = socle(*st.alg).cols();
            e["command"] = "socle";
            e["dim"] = dim;
            text << "socle: dim = " << dim << "\n";
            break;
          }
          case Command::Gorenstein: {
            bool g = is_gorenstein(*st.alg);
            e["command"] = "gorenstein";
            e["gorenstein"] = g;
            text << "gorenstein: " << (g ? "true" : "false") << "\n";
            break;
          }
          case Command::ExampleJs: {
            JSConfig cfg;
            cfg.bound = flags.bound;
            cfg.seed = flags.seed;
            bool alpha_given = false;
            std::string alpha_text = "3";
            for (const auto& [f, v] : c.flags) {
              if (f == "field") {
                if (v == "qq" || v == "QQ") {
                  cfg.ctx = FieldCtx::rationals();
                } else if ((v.rfind("gf", 0) == 0 || v.rfind("GF", 0) == 0) &&
                           v.size() > 2) {
                  try {
                    cfg.ctx = FieldCtx::prime_field(std::stoull(v.substr(2)));
                  } catch (const std::exception& ex) {
                    throw ExecError{i, std::string("bad --field: ") + ex.what()};
                  }
                } else {
                  throw ExecError{i, "bad --field value '" + v +
                                         "' (expected qq or gf<p>)"};
                }
              } else if (f == "alpha") {
                alpha_given = true;
                alpha_text = v;
              } else if (f == "bound") {
                cfg.bound = std::stoi(v);
              } else if (f == "max-period") {
                cfg.max_period = std::stoi(v);
              } else if (f == "window") {
                cfg.window = std::stoi(v);
              } else if (f == "seed") {
                cfg.seed = std::stoull(v);
              } else {
                throw ExecError{i, "unknown flag --" + f};
              }
            }
            if (!alpha_given && !cfg.ctx.is_prime_field()) alpha_text = "2";
            size_t slash = alpha_text.find('/');
            try {
              if (slash == std::string::npos)
                cfg.alpha = cfg.ctx.from_int(std::stoll(alpha_text));
              else
                cfg.alpha = cfg.ctx.from_fraction(
                    std::stoll(alpha_text.substr(0, slash)),
                    std::stoll(alpha_text.substr(slash + 1)));
            } catch (const std::exception& ex) {
              throw ExecError{i, std::string("bad --alpha: ") + ex.what()};
            }
            ExampleReport rep = run_js_experiment(cfg);
            e["command"] = "example_js";
            e["report"] = to_json(rep);
            text << "example js (" << rep.field << ", alpha = " << rep.alpha
                 << "): dim = " << rep.ring_dim << ", socle = " << rep.socle_dim
                 << ", gorenstein = " << (rep.gorenstein ? "true" : "false")
                 << "\n  complex ok = " << (rep.complex_report.ok() ? "yes" : "no")
                 << ", period = "
                 << (rep.period ? std::to_string(*rep.period) : "none")
                 << ", gdim = " << gkind_name(rep.reflexivity.kind)
                 << ", abdim = " << abkind_name(rep.ab.kind) << "\n";
            break;
          }
        }
        results.push_back(std::move(e));
      }
    } catch (const ExecError& err) {
      Json e;
      e["statement"] = err.stmt_index;
      e["error"] = err.message;
      results.push_back(std::move(e));
      text << "error (statement " << err.stmt_index << "): " << err.message
           << "\n";
      out.exit_code = 1;
      break;
    } catch (const std::exception& ex) {
      Json e;
      e["statement"] = i;
      e["error"] = ex.what();
      results.push_back(std::move(e));
      text << "error (statement " << i << "): " << ex.what() << "\n";
      out.exit_code = 1;
      break;
    }
  }
  out.json["results"] = std::move(results);
  out.text = text.str();
  return out;
}

}  // namespace abdim
