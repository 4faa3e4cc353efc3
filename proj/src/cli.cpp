#include "glc/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include "glc/ideal.hpp"
#include "glc/morphism.hpp"
#include "glc/resolution.hpp"
#include "json.hpp"

namespace glc::cli {

namespace {

std::string format_error(const std::string& what, int line, int col,
                         const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << "line " << line << ":" << col << ": " << what;
  if (!expected.empty()) {
    os << "; expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
  }
  return os.str();
}

}  // namespace

CliError::CliError(const std::string& what, int line_, int col_,
                   std::vector<std::string> expected_)
    : Error(format_error(what, line_, col_, expected_)),
      line(line_),
      col(col_),
      expected(std::move(expected_)) {}

namespace {

// ---------------------------------------------------------------------------
// lexer

enum class Tok { Ident, Int, Sym, Newline, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string s, int l, int c) {
    out.push_back(Token{k, std::move(s), l, c});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      if (depth == 0 && !out.empty() && out.back().kind != Tok::Newline)
        push(Tok::Newline, "\\n", line, col);
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int c0 = col;
      std::string s;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
              text[i] == '.')) {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      push(Tok::Ident, std::move(s), line, c0);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int c0 = col;
      std::string s;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        s.push_back(text[i]);
        ++i;
        ++col;
      }
      push(Tok::Int, std::move(s), line, c0);
      continue;
    }
    if (std::string("()[]=,+-*^/").find(c) != std::string::npos) {
      if (c == '(' || c == '[') ++depth;
      if ((c == ')' || c == ']') && depth > 0) --depth;
      push(Tok::Sym, std::string(1, c), line, col);
      ++col;
      ++i;
      continue;
    }
    throw LexicalError(std::string("unexpected character '") + c + "'", line, col);
  }
  if (!out.empty() && out.back().kind == Tok::Newline) out.pop_back();
  push(Tok::End, "", line, col);
  return out;
}

// ---------------------------------------------------------------------------
// parser

const std::vector<std::string>& command_verbs() {
  static const std::vector<std::string> v = {
      "dim",  "depth",         "pd",        "id",    "grade", "ext",
      "tor",  "deficiency",    "canonical", "gen-canonical", "gen-deficiency",
      "dual-side", "cech",     "limit",     "top",   "check", "suite"};
  return v;
}

class Parser {
 public:
  Parser(const std::string& text, const Options& opts)
      : opts_(opts), toks_(lex(text)) {
    session_.source = text;
  }

  Session parse() {
    for (;;) {
      skip_newlines();
      if (peek().kind == Tok::End) break;
      statement();
    }
    return std::move(session_);
  }

 private:
  const Options& opts_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  Session session_;
  std::string last_ring_;

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(at_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }
  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++at_;
  }

  [[noreturn]] void unexpected(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End      ? "end of input"
                      : t.kind == Tok::Newline ? "end of line"
                                               : "'" + t.text + "'";
    throw SyntacticError("unexpected " + got, t.line, t.col, std::move(expected));
  }

  Token expect_sym(const std::string& s) {
    if (peek().kind != Tok::Sym || peek().text != s) unexpected({"'" + s + "'"});
    return advance();
  }
  Token expect_ident() {
    if (peek().kind != Tok::Ident) unexpected({"name"});
    return advance();
  }
  Token expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) unexpected({"'" + kw + "'"});
    return advance();
  }
  Token expect_int() {
    if (peek().kind != Tok::Int) unexpected({"integer"});
    return advance();
  }

  bool adjacent(const Token& a, const Token& b) const {
    return a.line == b.line && b.col == a.col + static_cast<int>(a.text.size());
  }

  // command words and arguments: maximal runs of idents/ints glued by '-' or
  // '/' with no intervening space (theorem ids, builtin instance names,
  // negative integers)
  std::string read_chain() {
    std::string s;
    Token prev;
    if (peek().kind == Tok::Sym && peek().text == "-") {
      prev = advance();
      s = "-";
      if ((peek().kind != Tok::Ident && peek().kind != Tok::Int) || !adjacent(prev, peek()))
        unexpected({"integer", "name"});
    }
    if (peek().kind != Tok::Ident && peek().kind != Tok::Int) unexpected({"name", "integer"});
    prev = advance();
    s += prev.text;
    for (;;) {
      const Token& t = peek();
      if (t.kind != Tok::Sym || (t.text != "-" && t.text != "/") || !adjacent(prev, t)) break;
      const Token& after = peek(1);
      if ((after.kind != Tok::Ident && after.kind != Tok::Int) || !adjacent(t, after)) break;
      s += t.text;
      advance();
      prev = advance();
      s += prev.text;
    }
    return s;
  }

  void statement() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "ring") {
      advance();
      ring_decl();
    } else if (t.kind == Tok::Ident && t.text == "module") {
      advance();
      module_decl();
    } else if (t.kind == Tok::Ident && t.text == "ideal") {
      advance();
      ideal_decl();
    } else if (t.kind == Tok::Ident) {
      command();
    } else {
      unexpected({"'ring'", "'module'", "'ideal'", "command"});
    }
    if (peek().kind != Tok::Newline && peek().kind != Tok::End) unexpected({"end of line"});
  }

  void bind(const Token& name, Binding b) {
    if (session_.bindings.count(name.text))
      throw SemanticError("name '" + name.text + "' already bound", name.line, name.col);
    session_.bindings.emplace(name.text, std::move(b));
    session_.order.push_back(name.text);
  }

  Field parse_field() {
    if (peek().kind != Tok::Ident) unexpected({"'GF'", "'QQ'"});
    Token t = advance();
    std::int64_t want = opts_.field_override;
    if (t.text == "QQ") {
      return want > 0 ? make_prime_field(want, t) : Field::rationals();
    }
    if (t.text == "GF") {
      expect_sym("(");
      Token p = expect_int();
      expect_sym(")");
      if (want == -1) return Field::rationals();
      if (want > 0) return make_prime_field(want, p);
      if (p.text.size() > 18)
        throw SemanticError("field characteristic out of range", p.line, p.col);
      return make_prime_field(std::stoll(p.text), p);
    }
    unexpected({"'GF'", "'QQ'"});
  }

  Field make_prime_field(std::int64_t p, const Token& where) {
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      throw SemanticError(e.what(), where.line, where.col);
    }
  }

  MonomialOrder parse_order() {
    if (peek().kind == Tok::Ident) {
      if (peek().text == "grevlex") return advance(), MonomialOrder::GrevLex;
      if (peek().text == "lex") return advance(), MonomialOrder::Lex;
      if (peek().text == "grlex") return advance(), MonomialOrder::GrLex;
    }
    unexpected({"'grevlex'", "'lex'", "'grlex'"});
  }

  void ring_decl() {
    Token name = expect_ident();
    expect_sym("=");
    expect_keyword("poly");
    expect_sym("(");
    Field F = parse_field();
    expect_sym(",");
    expect_sym("[");
    std::vector<std::string> vars;
    for (;;) {
      Token v = expect_ident();
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end())
        throw SemanticError("duplicate variable '" + v.text + "'", v.line, v.col);
      vars.push_back(v.text);
      if (peek().kind == Tok::Sym && peek().text == ",") {
        advance();
        continue;
      }
      break;
    }
    expect_sym("]");
    expect_sym(",");
    MonomialOrder ord = parse_order();
    expect_sym(")");
    ctx_tmp_ = make_context(F, vars, ord);
    std::vector<Polynomial> rels;
    if (peek().kind == Tok::Ident && peek().text == "mod") {
      advance();
      expect_keyword("ideal");
      expect_sym("(");
      rels = poly_list(")");
      expect_sym(")");
    }
    RingPtr R;
    try {
      R = make_ring(ctx_tmp_, rels);
    } catch (const Error& e) {
      throw SemanticError(e.what(), name.line, name.col);
    }
    Binding b;
    b.kind = Binding::Kind::Ring;
    b.ring = R;
    bind(name, std::move(b));
    last_ring_ = name.text;
  }

  CtxPtr ctx_tmp_;

  std::vector<Polynomial> poly_list(const std::string& closer) {
    std::vector<Polynomial> out;
    if (peek().kind == Tok::Sym && peek().text == closer) return out;
    for (;;) {
      out.push_back(parse_poly());
      if (peek().kind == Tok::Sym && peek().text == ",") {
        advance();
        continue;
      }
      break;
    }
    return out;
  }

  Polynomial parse_poly() {
    Polynomial p = parse_term();
    while (peek().kind == Tok::Sym && (peek().text == "+" || peek().text == "-")) {
      bool plus = advance().text == "+";
      Polynomial q = parse_term();
      p = plus ? p + q : p - q;
    }
    return p;
  }

  Polynomial parse_term() {
    bool neg = false;
    while (peek().kind == Tok::Sym && peek().text == "-") {
      advance();
      neg = !neg;
    }
    Polynomial p = parse_factor();
    while (peek().kind == Tok::Sym && peek().text == "*") {
      advance();
      p = p * parse_factor();
    }
    return neg ? -p : p;
  }

  Scalar scalar_from_digits(const std::string& digits) {
    const Field& F = ctx_tmp_->field;
    if (F.kind() == FieldKind::Rationals) return F.from_rational(Rational(digits));
    std::int64_t p = F.modulus(), acc = 0;
    for (char c : digits) acc = (acc * 10 + (c - '0')) % p;
    return F.from_int(acc);
  }

  Polynomial parse_factor() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      Token num = advance();
      Scalar c = scalar_from_digits(num.text);
      if (peek().kind == Tok::Sym && peek().text == "/") {
        advance();
        Token den = expect_int();
        Scalar d = scalar_from_digits(den.text);
        if (ctx_tmp_->field.is_zero(d))
          throw SemanticError("division by zero", den.line, den.col);
        c = ctx_tmp_->field.div(c, d);
      }
      return Polynomial::constant(ctx_tmp_, c);
    }
    if (t.kind == Tok::Ident) {
      Token v = advance();
      auto it = std::find(ctx_tmp_->vars.begin(), ctx_tmp_->vars.end(), v.text);
      if (it == ctx_tmp_->vars.end())
        throw SemanticError("unknown variable '" + v.text + "'", v.line, v.col);
      std::size_t idx = it - ctx_tmp_->vars.begin();
      int pw = 1;
      if (peek().kind == Tok::Sym && peek().text == "^") {
        advance();
        Token e = expect_int();
        if (e.text.size() > 4) throw SemanticError("exponent out of range", e.line, e.col);
        pw = std::stoi(e.text);
      }
      return Polynomial::variable(ctx_tmp_, idx, pw);
    }
    if (t.kind == Tok::Sym && t.text == "(") {
      advance();
      Polynomial p = parse_poly();
      expect_sym(")");
      return p;
    }
    unexpected({"integer", "variable", "'('"});
  }

  void module_decl() {
    Token name = expect_ident();
    expect_sym("=");
    expect_keyword("coker");
    expect_sym("(");
    Token rname = expect_ident();
    auto rit = session_.bindings.find(rname.text);
    if (rit == session_.bindings.end())
      throw SemanticError("unknown name '" + rname.text + "'", rname.line, rname.col);
    if (rit->second.kind != Binding::Kind::Ring)
      throw SemanticError("'" + rname.text + "' is not a ring", rname.line, rname.col);
    RingPtr R = rit->second.ring;
    ctx_tmp_ = R->ctx;
    expect_sym(",");
    Token mopen = expect_sym("[");
    std::vector<std::vector<Polynomial>> rows;
    if (!(peek().kind == Tok::Sym && peek().text == "]")) {
      for (;;) {
        expect_sym("[");
        rows.push_back(poly_list("]"));
        expect_sym("]");
        if (peek().kind == Tok::Sym && peek().text == ",") {
          advance();
          continue;
        }
        break;
      }
    }
    expect_sym("]");
    std::vector<int> degs(rows.size(), 0);
    if (peek().kind == Tok::Sym && peek().text == ",") {
      advance();
      Token tw = expect_keyword("twists");
      expect_sym("=");
      expect_sym("[");
      std::vector<int> ds;
      if (!(peek().kind == Tok::Sym && peek().text == "]")) {
        for (;;) {
          bool neg = false;
          if (peek().kind == Tok::Sym && peek().text == "-") {
            advance();
            neg = true;
          }
          Token d = expect_int();
          if (d.text.size() > 4) throw SemanticError("twist out of range", d.line, d.col);
          ds.push_back((neg ? -1 : 1) * std::stoi(d.text));
          if (peek().kind == Tok::Sym && peek().text == ",") {
            advance();
            continue;
          }
          break;
        }
      }
      expect_sym("]");
      if (ds.size() != rows.size())
        throw SemanticError("twists count does not match the row count", tw.line, tw.col);
      degs = std::move(ds);
    }
    expect_sym(")");
    std::size_t ncols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
      if (r.size() != ncols)
        throw SemanticError("ragged matrix: rows of unequal length", mopen.line, mopen.col);
    std::vector<VecPoly> cols;
    for (std::size_t j = 0; j < ncols; ++j) {
      VecPoly col(R->ctx, rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
      cols.push_back(std::move(col));
    }
    ModPtr M;
    try {
      M = Module::make(R, degs, cols);
    } catch (const Error& e) {
      throw SemanticError(e.what(), name.line, name.col);
    }
    Binding b;
    b.kind = Binding::Kind::Module;
    b.ring = R;
    b.module = M;
    bind(name, std::move(b));
  }

  void ideal_decl() {
    Token name = expect_ident();
    expect_sym("=");
    expect_sym("(");
    if (last_ring_.empty())
      throw SemanticError("no ring declared before ideal '" + name.text + "'", name.line,
                          name.col);
    RingPtr R = session_.bindings.at(last_ring_).ring;
    ctx_tmp_ = R->ctx;
    std::vector<Polynomial> gens = poly_list(")");
    expect_sym(")");
    for (const auto& g : gens)
      if (!g.is_homogeneous())
        throw SemanticError("non-homogeneous ideal generator: " + g.str(), name.line, name.col);
    Binding b;
    b.kind = Binding::Kind::Ideal;
    b.ring = R;
    b.ideal = Ideal(R->ctx, gens);
    bind(name, std::move(b));
  }

  void command() {
    Command c;
    c.line = peek().line;
    c.col = peek().col;
    c.verb = read_chain();
    const auto& verbs = command_verbs();
    if (std::find(verbs.begin(), verbs.end(), c.verb) == verbs.end()) {
      std::vector<std::string> exp;
      for (const auto& v : verbs) exp.push_back("'" + v + "'");
      throw SyntacticError("unknown command '" + c.verb + "'", c.line, c.col, std::move(exp));
    }
    while (peek().kind != Tok::Newline && peek().kind != Tok::End) c.args.push_back(read_chain());
    session_.commands.push_back(std::move(c));
  }
};

// ---------------------------------------------------------------------------
// canonical printing

std::string field_str(const Field& F) {
  return F.kind() == FieldKind::Rationals ? "QQ" : "GF(" + std::to_string(F.modulus()) + ")";
}

std::string order_str(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::GrevLex: return "grevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GrLex: return "grlex";
  }
  return "grevlex";
}

std::string ring_name_of(const Session& s, const RingPtr& R) {
  for (const auto& n : s.order) {
    const Binding& b = s.bindings.at(n);
    if (b.kind == Binding::Kind::Ring && b.ring == R) return n;
  }
  return "?";
}

}  // namespace

std::string print_session(const Session& s) {
  std::ostringstream os;
  for (const auto& n : s.order) {
    const Binding& b = s.bindings.at(n);
    switch (b.kind) {
      case Binding::Kind::Ring: {
        const RingPtr& R = b.ring;
        os << "ring " << n << " = poly(" << field_str(R->ctx->field) << ", [";
        for (std::size_t i = 0; i < R->ctx->vars.size(); ++i)
          os << (i ? ", " : "") << R->ctx->vars[i];
        os << "], " << order_str(R->ctx->order) << ")";
        if (!R->rels.empty()) {
          os << " mod ideal(";
          for (std::size_t i = 0; i < R->rels.size(); ++i)
            os << (i ? ", " : "") << R->rels[i].str();
          os << ")";
        }
        os << "\n";
        break;
      }
      case Binding::Kind::Module: {
        const ModPtr& M = b.module;
        os << "module " << n << " = coker(" << ring_name_of(s, b.ring) << ", [";
        for (std::size_t i = 0; i < M->ngens(); ++i) {
          os << (i ? ", " : "") << "[";
          for (std::size_t j = 0; j < M->rels.size(); ++j)
            os << (j ? ", " : "") << M->rels[j][i].str();
          os << "]";
        }
        os << "]";
        bool tw = false;
        for (int d : M->F0.degs) tw = tw || d != 0;
        if (tw) {
          os << ", twists = [";
          for (std::size_t i = 0; i < M->F0.degs.size(); ++i)
            os << (i ? ", " : "") << M->F0.degs[i];
          os << "]";
        }
        os << ")\n";
        break;
      }
      case Binding::Kind::Ideal: {
        os << "ideal " << n << " = (";
        const auto& gens = b.ideal.gens();
        for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? ", " : "") << gens[i].str();
        os << ")\n";
        break;
      }
    }
  }
  for (const auto& c : s.commands) {
    os << c.verb;
    for (const auto& a : c.args) os << " " << a;
    os << "\n";
  }
  return os.str();
}

Session parse_session(const std::string& text, const Options& opts) {
  return Parser(text, opts).parse();
}

// ---------------------------------------------------------------------------
// command execution

namespace {

constexpr int kCechStepBound = 10;

[[noreturn]] void cmd_err(const Command& c, const std::string& what,
                          std::vector<std::string> expected = {}) {
  throw SemanticError(what, c.line, c.col, std::move(expected));
}

const Binding& lookup(const Session& s, const Command& c, const std::string& name) {
  auto it = s.bindings.find(name);
  if (it == s.bindings.end()) cmd_err(c, "unknown name '" + name + "'");
  return it->second;
}

ModPtr as_module(const Session& s, const Command& c, const std::string& name) {
  const Binding& b = lookup(s, c, name);
  if (b.kind == Binding::Kind::Ring) return ring_module(b.ring);
  if (b.kind == Binding::Kind::Module) return b.module;
  cmd_err(c, "'" + name + "' is an ideal, not a module");
}

void need_args(const Command& c, std::size_t lo, std::size_t hi) {
  if (c.args.size() < lo || c.args.size() > hi) {
    std::string what = "command '" + c.verb + "' takes " +
                       (lo == hi ? std::to_string(lo)
                                 : std::to_string(lo) + " to " + std::to_string(hi)) +
                       " arguments, got " + std::to_string(c.args.size());
    cmd_err(c, what);
  }
}

int arg_int(const Command& c, std::size_t k) {
  const std::string& a = c.args[k];
  std::size_t start = a.size() && a[0] == '-' ? 1 : 0;
  if (start == a.size() || a.size() > 10 ||
      a.find_first_not_of("0123456789", start) != std::string::npos)
    cmd_err(c, "argument " + std::to_string(k + 1) + " of '" + c.verb +
                   "' must be an integer, got '" + a + "'");
  return std::stoi(a);
}

void same_ring(const Command& c, const RingPtr& a, const RingPtr& b) {
  if (a != b) cmd_err(c, "ring mismatch: arguments live over different rings");
}

RingPtr ring_of_module_arg(const Session& s, const Command& c, const std::string& name) {
  return lookup(s, c, name).ring;
}

std::string render_module(const ModPtr& M) {
  return is_zero_module(*M) ? "0" : hilbert_series(*M).str();
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "infinite"; }

std::string window_str(const std::map<int, std::optional<long long>>& vals) {
  std::ostringstream os;
  bool first = true, any = false;
  for (const auto& [j, v] : vals) {
    if (v && *v == 0) continue;
    if (!first) os << " ";
    first = false;
    any = true;
    os << j << ":" << (v ? std::to_string(*v) : "?");
  }
  return any ? os.str() : "0";
}

void wit(Report& r, const std::string& k, const std::string& v) {
  r.witnesses.emplace_back(k, v);
}

Instance session_instance(const Session& s, const Command& c, const std::string& mname,
                          const std::string& nname, const std::string& aname) {
  ModPtr M = as_module(s, c, mname);
  ModPtr N = as_module(s, c, nname);
  same_ring(c, ring_of_module_arg(s, c, mname), ring_of_module_arg(s, c, nname));
  RingPtr R = ring_of_module_arg(s, c, mname);
  Ideal a;
  if (aname.empty()) {
    a = irrelevant_ideal(R->ctx);
  } else {
    const Binding& b = lookup(s, c, aname);
    if (b.kind != Binding::Kind::Ideal) cmd_err(c, "'" + aname + "' is not an ideal");
    same_ring(c, b.ring, R);
    a = b.ideal;
  }
  return Instance{R, M, N, a, "session"};
}

void summarize_reports(Report& r, const std::vector<TheoremReport>& reps) {
  int nv = 0, nh = 0, nf = 0, ni = 0;
  for (const auto& t : reps) {
    wit(r, t.instance + " " + t.theorem_id, status_str(t.status));
    switch (t.status) {
      case CheckStatus::Verified: ++nv; break;
      case CheckStatus::HypothesisNotMet: ++nh; break;
      case CheckStatus::Failed: ++nf; break;
      case CheckStatus::Inconclusive: ++ni; break;
    }
  }
  std::ostringstream os;
  os << "verified " << nv << ", hypothesis-not-met " << nh << ", FAILED " << nf
     << ", inconclusive " << ni;
  r.result = os.str();
  r.status = nf ? "FAILED" : "ok";
}

void run_check(const Session& s, const Command& c, Report& r) {
  need_args(c, 1, 4);
  const std::string& id = c.args[0];
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::vector<std::string> exp;
    for (const auto& i : ids) exp.push_back("'" + i + "'");
    cmd_err(c, "unknown theorem id '" + id + "'", std::move(exp));
  }
  std::vector<Instance> insts;
  if (c.args.size() == 1) {
    insts = builtin_instances();
  } else if (c.args.size() == 2) {
    for (auto& b : builtin_instances())
      if (b.provenance == c.args[1]) insts.push_back(b);
    if (insts.empty())
      cmd_err(c, "'" + c.args[1] + "' is not a builtin instance; pass M N [a] instead");
  } else {
    insts.push_back(session_instance(s, c, c.args[1], c.args[2],
                                     c.args.size() == 4 ? c.args[3] : ""));
  }
  if (insts.size() == 1) {
    TheoremReport t = check(id, insts[0]);
    r.result = status_str(t.status);
    r.status = status_str(t.status);
    wit(r, "instance", t.instance);
    for (const auto& [k, v] : t.witnesses) wit(r, k, v);
    if (t.proxy) wit(r, "isomorphisms", "Hilbert/annihilator proxy");
  } else {
    std::vector<TheoremReport> reps;
    for (const auto& inst : insts) reps.push_back(check(id, inst));
    summarize_reports(r, reps);
  }
}

void run_suite_cmd(const Session& s, const Command& c, const Options& opts, Report& r) {
  (void)s;
  need_args(c, 0, 2);
  std::vector<Instance> insts;
  if (c.args.empty()) {
    insts = builtin_instances();
  } else {
    GenParams p;
    p.nvars = 3;
    p.max_degree = 3;
    p.count = c.args.size() == 2 ? arg_int(c, 1) : 5;
    if (p.count < 0 || p.count > 500) cmd_err(c, "instance count out of range");
    try {
      insts = gen_instances(c.args[0], p, opts.seed);
    } catch (const Error& e) {
      cmd_err(c, e.what(),
              {"'monomial'", "'binomial-hypersurface'", "'ci'", "'random-matrix'"});
    }
  }
  SuiteResult res = run_suite(theorem_ids(), insts);
  summarize_reports(r, res.reports);
}

void dispatch(const Session& s, const Command& c, const Options& opts, Report& r) {
  const std::string& v = c.verb;
  if (v == "dim") {
    need_args(c, 1, 1);
    const Binding& b = lookup(s, c, c.args[0]);
    if (b.kind == Binding::Kind::Ring) {
      r.result = std::to_string(b.ring->dim);
    } else if (b.kind == Binding::Kind::Module) {
      auto d = krull_dim(*b.module);
      r.result = d ? std::to_string(*d) : "-infinite";
    } else {
      cmd_err(c, "dim takes a ring or module");
    }
  } else if (v == "depth") {
    need_args(c, 1, 1);
    ModPtr M = as_module(s, c, c.args[0]);
    r.result = is_zero_module(*M) ? "infinite" : std::to_string(depth_module(M));
  } else if (v == "pd") {
    need_args(c, 1, 1);
    ModPtr M = as_module(s, c, c.args[0]);
    r.result = is_zero_module(*M) ? "-infinite" : opt_str(projective_dimension(M));
  } else if (v == "id") {
    need_args(c, 1, 1);
    ModPtr M = as_module(s, c, c.args[0]);
    r.result = is_zero_module(*M) ? "-infinite" : opt_str(injective_dimension(M));
  } else if (v == "grade") {
    need_args(c, 2, 2);
    ModPtr X = as_module(s, c, c.args[1]);
    const Binding& b = lookup(s, c, c.args[0]);
    same_ring(c, b.ring, ring_of_module_arg(s, c, c.args[1]));
    if (b.kind == Binding::Kind::Ideal) {
      r.result = opt_str(grade_ideal(b.ideal, X));
    } else {
      r.result = opt_str(grade_module(as_module(s, c, c.args[0]), X));
    }
  } else if (v == "ext" || v == "tor") {
    need_args(c, 3, 3);
    int i = arg_int(c, 0);
    ModPtr A = as_module(s, c, c.args[1]);
    ModPtr B = as_module(s, c, c.args[2]);
    same_ring(c, ring_of_module_arg(s, c, c.args[1]), ring_of_module_arg(s, c, c.args[2]));
    if (i < 0) cmd_err(c, "homological index must be nonnegative");
    r.result = render_module(v == "ext" ? ext_module(i, A, B) : tor_module(i, A, B));
  } else if (v == "deficiency") {
    need_args(c, 2, 2);
    int i = arg_int(c, 0);
    ModPtr M = as_module(s, c, c.args[1]);
    auto d = krull_dim(*M);
    if (!d || i < 0 || i > *d) {
      r.result = "0";
    } else {
      r.result = render_module(deficiency_table(M)[i]);
    }
  } else if (v == "canonical") {
    need_args(c, 1, 1);
    const Binding& b = lookup(s, c, c.args[0]);
    if (b.kind == Binding::Kind::Ring) {
      r.result = render_module(canonical_module_ring(b.ring));
    } else if (b.kind == Binding::Kind::Module && !is_zero_module(*b.module)) {
      r.result = render_module(canonical_module(b.module));
    } else {
      cmd_err(c, "canonical takes a ring or a nonzero module");
    }
  } else if (v == "gen-canonical") {
    need_args(c, 2, 2);
    ModPtr N = as_module(s, c, c.args[0]);
    ModPtr M = as_module(s, c, c.args[1]);
    same_ring(c, ring_of_module_arg(s, c, c.args[0]), ring_of_module_arg(s, c, c.args[1]));
    try {
      auto [deg, K] = generalized_canonical(N, M);
      wit(r, "s", std::to_string(deg));
      r.result = render_module(K);
    } catch (const Error& e) {
      cmd_err(c, e.what());
    }
  } else if (v == "gen-deficiency") {
    need_args(c, 3, 3);
    int i = arg_int(c, 0);
    ModPtr N = as_module(s, c, c.args[1]);
    ModPtr M = as_module(s, c, c.args[2]);
    same_ring(c, ring_of_module_arg(s, c, c.args[1]), ring_of_module_arg(s, c, c.args[2]));
    try {
      r.result = render_module(generalized_deficiency(i, N, M));
    } catch (const Error& e) {
      cmd_err(c, e.what());
    }
  } else if (v == "dual-side") {
    need_args(c, 3, 3);
    int i = arg_int(c, 0);
    ModPtr M = as_module(s, c, c.args[1]);
    ModPtr N = as_module(s, c, c.args[2]);
    same_ring(c, ring_of_module_arg(s, c, c.args[1]), ring_of_module_arg(s, c, c.args[2]));
    try {
      DualSideModule D = glc_dual_side(i, M, N);
      wit(r, "route", D.route == DualRoute::CMCanonical ? "CM-canonical" : "hyperext-dualizing");
      r.result = render_module(D.module);
    } catch (const Error& e) {
      cmd_err(c, e.what());
    }
  } else if (v == "cech") {
    need_args(c, 3, 3);
    int i = arg_int(c, 0);
    ModPtr M = as_module(s, c, c.args[1]);
    ModPtr N = as_module(s, c, c.args[2]);
    RingPtr R = ring_of_module_arg(s, c, c.args[1]);
    same_ring(c, R, ring_of_module_arg(s, c, c.args[2]));
    std::vector<Polynomial> xs;
    for (std::size_t k = 0; k < R->nvars(); ++k) xs.push_back(Polynomial::variable(R->ctx, k));
    CechResult res = graded_cech_cohomology(i, xs, M, N, opts.window, kCechStepBound);
    wit(r, "window", "[" + std::to_string(res.window.first) + ", " +
                         std::to_string(res.window.second) + "]");
    wit(r, "conclusive", res.conclusive ? "yes" : "no");
    r.result = window_str(res.values);
    if (!res.conclusive) r.status = "inconclusive";
  } else if (v == "limit") {
    need_args(c, 4, 4);
    int i = arg_int(c, 0);
    const Binding& ab = lookup(s, c, c.args[1]);
    if (ab.kind != Binding::Kind::Ideal) cmd_err(c, "'" + c.args[1] + "' is not an ideal");
    ModPtr M = as_module(s, c, c.args[2]);
    ModPtr N = as_module(s, c, c.args[3]);
    same_ring(c, ring_of_module_arg(s, c, c.args[2]), ring_of_module_arg(s, c, c.args[3]));
    same_ring(c, ab.ring, ring_of_module_arg(s, c, c.args[2]));
    TruncatedLimit L = glc_truncated_limit(i, ab.ideal, M, N, opts.nmax, opts.window);
    wit(r, "window", "[" + std::to_string(L.window.first) + ", " +
                         std::to_string(L.window.second) + "]");
    wit(r, "stabilized", L.stabilized ? "yes" : "no");
    r.result = window_str(L.limit_hilbert);
    if (!L.stabilized) r.status = "inconclusive";
  } else if (v == "top") {
    need_args(c, 2, 2);
    ModPtr M = as_module(s, c, c.args[0]);
    ModPtr N = as_module(s, c, c.args[1]);
    same_ring(c, ring_of_module_arg(s, c, c.args[0]), ring_of_module_arg(s, c, c.args[1]));
    r.result = std::to_string(top_nonvanishing(M, N));
  } else if (v == "check") {
    run_check(s, c, r);
  } else if (v == "suite") {
    run_suite_cmd(s, c, opts, r);
  } else {
    cmd_err(c, "unknown command '" + v + "'");
  }
}

}  // namespace

Report run_command(const Session& s, const Command& c, const Options& opts) {
  Report r;
  r.command = c.verb;
  r.inputs = c.args;
  auto t0 = std::chrono::steady_clock::now();
  dispatch(s, c, opts, r);
  r.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> run_session(const Session& s, const Options& opts) {
  std::vector<Report> out;
  for (const auto& c : s.commands) out.push_back(run_command(s, c, opts));
  return out;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& a : r.inputs) os << " " << a;
  os << ": " << r.result << "\n";
  for (const auto& [k, v] : r.witnesses) os << "  " << k << ": " << v << "\n";
  return os.str();
}

std::string render_json(const std::vector<Report>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& [k, v] : r.witnesses)
      w.push_back(nlohmann::json{{"key", k}, {"value", v}});
    // runtime_ms is pinned to 0 so identical inputs give identical bytes
    arr.push_back(nlohmann::json{{"command", r.command},
                                 {"inputs", r.inputs},
                                 {"result", r.result},
                                 {"witnesses", w},
                                 {"status", r.status},
                                 {"runtime_ms", 0},
                                 {"version", kVersion}});
  }
  return arr.dump(2) + "\n";
}

int exit_code(const std::vector<Report>& rs) {
  for (const auto& r : rs)
    if (r.status == "FAILED") return 1;
  return 0;
}

}  // namespace glc::cli
