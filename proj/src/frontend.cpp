#include "mcatt/frontend.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "mcatt/ps.hpp"
#include "mcatt/subst.hpp"
#include "mcatt/translate.hpp"

namespace mcatt::frontend {

const char* keyword_name(Keyword k) {
  switch (k) {
    case Keyword::Coh: return "coh";
    case Keyword::Mcoh: return "mcoh";
    case Keyword::Let: return "let";
  }
  return "?";
}

// ---------------------------------------------------------------- lexing

namespace {

enum class Tok {
  Name,
  Star,
  One,
  Unit,
  Arrow,
  Colon,
  Comma,
  LParen,
  RParen,
  LBrack,
  RBrack,
  AtBrack,
  Assign,
  Equals,
  End
};

struct Token {
  Tok kind;
  std::string text;
  int line = 0, col = 0;
};

bool name_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool name_cont(char c) {
  return std::isalnum((unsigned char)c) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& text, const std::string& path) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw CheckError(ErrorCode::ParseError, "lex", msg, Span{path, line, col});
  };
  auto tok = [&](Tok k, std::string t) {
    out.push_back({k, std::move(t), line, col});
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
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
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    switch (c) {
      case '(':
        if (next == ')') {
          tok(Tok::Unit, "()");
          i += 2;
          col += 2;
        } else {
          tok(Tok::LParen, "(");
          ++i;
          ++col;
        }
        continue;
      case ')': tok(Tok::RParen, ")"); ++i; ++col; continue;
      case '[': tok(Tok::LBrack, "["); ++i; ++col; continue;
      case ']': tok(Tok::RBrack, "]"); ++i; ++col; continue;
      case ',': tok(Tok::Comma, ","); ++i; ++col; continue;
      case '*': tok(Tok::Star, "*"); ++i; ++col; continue;
      case '=': tok(Tok::Equals, "="); ++i; ++col; continue;
      case '1': tok(Tok::One, "1"); ++i; ++col; continue;
      case '-':
        if (next != '>') fail("expected '>' after '-'");
        tok(Tok::Arrow, "->");
        i += 2;
        col += 2;
        continue;
      case ':':
        if (next == '=') {
          tok(Tok::Assign, ":=");
          i += 2;
          col += 2;
        } else {
          tok(Tok::Colon, ":");
          ++i;
          ++col;
        }
        continue;
      case '@':
        if (next != '[') fail("expected '[' after '@'");
        tok(Tok::AtBrack, "@[");
        i += 2;
        col += 2;
        continue;
      default: break;
    }
    if (name_start(c)) {
      size_t j = i;
      while (j < text.size() && name_cont(text[j])) ++j;
      tok(Tok::Name, text.substr(i, j - i));
      col += (int)(j - i);
      i = j;
      continue;
    }
    fail(std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// --------------------------------------------------------------- parsing

struct Parser {
  std::vector<Token> ts;
  size_t pos = 0;
  std::string path;

  const Token& peek(size_t k = 0) const {
    return ts[std::min(pos + k, ts.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw CheckError(ErrorCode::ParseError, "parse", msg + ", found " + got,
                     Span{path, t.line, t.col});
  }

  Token eat(Tok k, const std::string& what) {
    if (!at(k)) fail(peek(), "expected " + what);
    return ts[pos++];
  }

  static bool reserved_word(const std::string& s) {
    return s == "coh" || s == "mcoh" || s == "mop" || s == "let";
  }

  bool starts_atom() const {
    if (at(Tok::Unit) || at(Tok::LParen)) return true;
    return at(Tok::Name) && !reserved_word(peek().text);
  }

  SurfaceTmPtr mk_tm(std::variant<SApp, SUnit, SExplicit> node, const Token& t) {
    auto p = std::make_shared<SurfaceTm>();
    p->node = std::move(node);
    p->line = t.line;
    p->col = t.col;
    return p;
  }
  SurfaceTyPtr mk_ty(std::variant<SObj, SOne, SArrow, SHom> node, const Token& t) {
    auto p = std::make_shared<SurfaceTy>();
    p->node = std::move(node);
    p->line = t.line;
    p->col = t.col;
    return p;
  }

  SurfaceTmPtr explicit_tail(const Token& head) {
    eat(Tok::AtBrack, "'@['");
    SExplicit e{head.text, {}};
    if (!at(Tok::RBrack)) {
      while (true) {
        Token x = eat(Tok::Name, "a component name");
        eat(Tok::Assign, "':='");
        e.assigns.emplace_back(x.text, term());
        if (!at(Tok::Comma)) break;
        eat(Tok::Comma, "','");
      }
    }
    eat(Tok::RBrack, "']'");
    return mk_tm(std::move(e), head);
  }

  SurfaceTmPtr atom() {
    const Token& t = peek();
    if (t.kind == Tok::Unit) {
      ++pos;
      return mk_tm(SUnit{}, t);
    }
    if (t.kind == Tok::LParen) {
      ++pos;
      SurfaceTmPtr inner = term();
      eat(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Name && !reserved_word(t.text)) {
      ++pos;
      if (at(Tok::AtBrack)) return explicit_tail(t);
      return mk_tm(SApp{t.text, {}}, t);
    }
    fail(t, "expected a term");
  }

  SurfaceTmPtr term() {
    if (at(Tok::Name) && !reserved_word(peek().text)) {
      Token head = ts[pos++];
      if (at(Tok::AtBrack)) return explicit_tail(head);
      SApp app{head.text, {}};
      while (starts_atom()) app.args.push_back(atom());
      return mk_tm(std::move(app), head);
    }
    SurfaceTmPtr t = atom();
    if (starts_atom()) fail(peek(), "only a named operation takes arguments");
    return t;
  }

  SurfaceTyPtr type() {
    const Token& t = peek();
    if (t.kind == Tok::Star) {
      ++pos;
      return mk_ty(SObj{}, t);
    }
    if (t.kind == Tok::One) {
      ++pos;
      return mk_ty(SOne{}, t);
    }
    if (t.kind == Tok::Name && t.text == "Hom" && peek(1).kind == Tok::LBrack) {
      ++pos;
      eat(Tok::LBrack, "'['");
      SurfaceTyPtr base = type();
      eat(Tok::RBrack, "']'");
      eat(Tok::LParen, "'('");
      SurfaceTmPtr s = term();
      eat(Tok::Comma, "','");
      SurfaceTmPtr u = term();
      eat(Tok::RParen, "')'");
      return mk_ty(SHom{base, s, u}, t);
    }
    SurfaceTmPtr s = term();
    eat(Tok::Arrow, "'->' in a type");
    SurfaceTmPtr u = term();
    return mk_ty(SArrow{s, u}, t);
  }

  Item item() {
    Token kw = eat(Tok::Name, "'coh', 'mcoh', 'mop' or 'let'");
    Keyword k;
    if (kw.text == "coh")
      k = Keyword::Coh;
    else if (kw.text == "mcoh" || kw.text == "mop")
      k = Keyword::Mcoh;
    else if (kw.text == "let")
      k = Keyword::Let;
    else
      fail(kw, "expected 'coh', 'mcoh', 'mop' or 'let'");
    Token name = eat(Tok::Name, "a definition name");
    if (reserved_word(name.text)) fail(name, "reserved word used as a name");
    Item it;
    it.keyword = k;
    it.name = name.text;
    it.span = Span{name.text, name.line, name.col};
    while (at(Tok::LParen)) {
      eat(Tok::LParen, "'('");
      Token x = eat(Tok::Name, "a binder name");
      if (reserved_word(x.text)) fail(x, "reserved word used as a name");
      eat(Tok::Colon, "':'");
      it.telescope.emplace_back(x.text, type());
      eat(Tok::RParen, "')'");
    }
    eat(Tok::Colon, "':'");
    it.result_ty = type();
    if (k == Keyword::Let) {
      eat(Tok::Equals, "'='");
      it.body = term();
    }
    return it;
  }
};

}  // namespace

ParsedFile parse(const std::string& text, const std::string& path) {
  Parser p{lex(text, path), 0, path};
  ParsedFile f;
  f.path = path;
  while (!p.at(Tok::End)) f.items.push_back(p.item());
  return f;
}

// ----------------------------------------------------------- elaboration

const Def* Env::find(const std::string& name) const {
  for (auto it = defs.rbegin(); it != defs.rend(); ++it)
    if (it->name == name) return &*it;
  return nullptr;
}

namespace {

Span at(const SurfaceTm& t) { return Span{"", t.line, t.col}; }

// Renames an index pair to the canonical binder names, for comparing
// constructor heads up to the choice of telescope names.
std::pair<Ctx, TyPtr> canon_index(const Ctx& ps, const TyPtr& ty) {
  Renaming r;
  int i = 0;
  for (const auto& [x, a] : ps.bindings) r[x] = Var{"v" + std::to_string(i++)};
  return {rename(ps, r), rename(ty, r)};
}

bool same_index(const CohTm* a, const CohTm* b) {
  if (a->kind != b->kind || a->theory != b->theory) return false;
  auto [pa, ta] = canon_index(a->ps, a->ty);
  auto [pb, tb] = canon_index(b->ps, b->ty);
  return pa == pb && equal(ta, tb);
}

// First-order matching of index binder types against inferred argument
// types. Pattern variables are the binders of the telescope; everything
// else must agree literally.
struct Matcher {
  const Ctx& tele;
  std::map<Var, TmPtr> sol;

  bool assign(const Var& x, const TmPtr& t) {
    auto it = sol.find(x);
    if (it == sol.end()) {
      sol[x] = t;
      return true;
    }
    return equal(canon(it->second), canon(t));
  }

  bool tm(const TmPtr& pat, const TmPtr& got) {
    if (const auto* v = as_var(*pat)) {
      if (tele.binds(v->v)) return assign(v->v, got);
      return equal(pat, got);
    }
    if (is_unit_tm(*pat)) return is_unit_tm(*got);
    const auto* pc = as_coh(*pat);
    const auto* gc = as_coh(*got);
    if (!pc || !gc || !same_index(pc, gc)) return false;
    if (pc->args.size() != gc->args.size()) return false;
    for (size_t i = 0; i < pc->args.size(); ++i)
      if (!tm(pc->args.assigns[i].second, gc->args.assigns[i].second)) return false;
    return true;
  }

  bool ty(const TyPtr& pat, const TyPtr& got) {
    if (is_obj(*pat)) return is_obj(*got);
    if (is_unit(*pat)) return is_unit(*got);
    const auto* ph = as_hom(*pat);
    const auto* gh = as_hom(*got);
    if (!ph || !gh) return false;
    return ty(ph->base, gh->base) && tm(ph->src, gh->src) && tm(ph->tgt, gh->tgt);
  }
};

TmPtr finish_app(Theory th, const Ctx& scope, const Def& def, Sub s) {
  if (def.keyword == Keyword::Let) {
    require_sub(th, scope, s, def.telescope);
    return mcatt::apply(def.body, s);
  }
  Theory family = def.keyword == Keyword::Mcoh ? Theory::Mcatt : Theory::Catt;
  return tm_coh(def.kind, def.telescope, def.result_ty, std::move(s), family);
}

const Def& resolve(const Env& env, Theory th, const std::string& head, const Span& sp) {
  const Def* def = env.find(head);
  if (!def)
    throw CheckError(ErrorCode::UnboundVariable, "elaborate",
                     "unknown name '" + head + "'", sp);
  if (def->theory != th)
    throw CheckError(ErrorCode::TheoryViolation, "elaborate",
                     "'" + head + "' belongs to " + theory_name(def->theory) +
                         " and cannot be used in a " + theory_name(th) + " position",
                     sp);
  return *def;
}

// Components the compact application form never spells out: the unit
// slots of an mcoh (object binders of the index) and, in the unit
// theories, unit-typed binders of a let, whose value is forced.
bool auto_filled(const Def& def, Theory th, const TyPtr& binder_ty) {
  if (def.keyword == Keyword::Mcoh) return is_obj(*binder_ty);
  if (def.keyword == Keyword::Let && theory_has_unit(th)) return is_unit(*binder_ty);
  return false;
}

TmPtr elab_compact(Theory th, const Ctx& scope, const Def& def,
                   const std::vector<TmPtr>& args, const Span& sp) {
  std::vector<Var> slots;
  for (const Var& x : locally_maximal(def.telescope))
    if (!auto_filled(def, th, *def.telescope.lookup(x))) slots.push_back(x);
  if (args.size() != slots.size())
    throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                     "'" + def.name + "' takes " + std::to_string(slots.size()) +
                         " arguments, got " + std::to_string(args.size()),
                     sp);

  Matcher m{def.telescope};
  for (const auto& [x, b] : def.telescope.bindings)
    if (auto_filled(def, th, b)) m.sol[x] = tm_unit();

  bool mcoh = def.keyword == Keyword::Mcoh;
  for (size_t j = 0; j < slots.size(); ++j) {
    const Var& x = slots[j];
    TyPtr pattern = *def.telescope.lookup(x);
    if (mcoh)
      pattern = normalize(Theory::Mcatt, desusp(pattern), desusp(def.telescope));
    else if (theory_has_unit(th))
      pattern = normalize(th, pattern, def.telescope);
    TyPtr got = infer(th, scope, args[j]);
    if (theory_has_unit(th)) got = normalize(th, got, scope);
    if (!m.assign(x, args[j]) || !m.ty(pattern, got))
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "argument " + std::to_string(j + 1) + " of '" + def.name +
                           "' has type " + show(got) + " where the binder '" +
                           x.name + "' needs " + show(pattern),
                       sp);
  }

  for (const auto& [x, b] : def.telescope.bindings)
    if (!m.sol.count(x))
      throw CheckError(ErrorCode::ElaborationAmbiguous, "elaborate",
                       "component '" + x.name + "' of '" + def.name +
                           "' is not determined by the arguments; spell it out with " +
                           def.name + " @[...]",
                       sp);

  Sub s;
  for (const auto& [x, b] : def.telescope.bindings) s.push(x, m.sol.at(x));
  return finish_app(th, scope, def, std::move(s));
}

TmPtr elab_explicit(Theory th, const Ctx& scope, const Def& def,
                    const std::vector<std::pair<std::string, TmPtr>>& assigns,
                    const Span& sp) {
  std::map<std::string, TmPtr> by_name;
  for (const auto& [n, t] : assigns) {
    if (by_name.count(n))
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "component '" + n + "' given twice", sp);
    if (!def.telescope.binds(Var{n}))
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "'" + def.name + "' has no component '" + n + "'", sp);
    by_name[n] = t;
  }
  Sub s;
  for (const auto& [x, b] : def.telescope.bindings) {
    auto it = by_name.find(x.name);
    if (it == by_name.end())
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "component '" + x.name + "' of '" + def.name + "' is missing",
                       sp);
    s.push(x, it->second);
  }
  return finish_app(th, scope, def, std::move(s));
}

}  // namespace

TyPtr elaborate_ty(const Env& env, Theory th, const Ctx& scope, const SurfaceTy& a) {
  if (std::holds_alternative<SObj>(a.node)) return ty_obj();
  if (std::holds_alternative<SOne>(a.node)) return ty_unit();
  if (const auto* ar = std::get_if<SArrow>(&a.node)) {
    TmPtr s = elaborate_tm(env, th, scope, *ar->src);
    TmPtr u = elaborate_tm(env, th, scope, *ar->tgt);
    return ty_hom(infer(th, scope, s), s, u);
  }
  const auto& h = std::get<SHom>(a.node);
  TyPtr base = elaborate_ty(env, th, scope, *h.base);
  return ty_hom(base, elaborate_tm(env, th, scope, *h.src),
                elaborate_tm(env, th, scope, *h.tgt));
}

TmPtr elaborate_tm(const Env& env, Theory th, const Ctx& scope, const SurfaceTm& t) {
  if (std::holds_alternative<SUnit>(t.node)) return tm_unit();
  if (const auto* e = std::get_if<SExplicit>(&t.node)) {
    if (scope.binds(Var{e->head}))
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "the variable '" + e->head + "' takes no component list", at(t));
    std::vector<std::pair<std::string, TmPtr>> assigns;
    for (const auto& [n, st] : e->assigns)
      assigns.emplace_back(n, elaborate_tm(env, th, scope, *st));
    return elab_explicit(th, scope, resolve(env, th, e->head, at(t)), assigns, at(t));
  }
  const auto& app = std::get<SApp>(t.node);
  if (scope.binds(Var{app.head})) {
    if (!app.args.empty())
      throw CheckError(ErrorCode::ElaborationMismatch, "elaborate",
                       "the variable '" + app.head + "' takes no arguments", at(t));
    return tm_var(Var{app.head});
  }
  std::vector<TmPtr> args;
  for (const auto& sa : app.args) args.push_back(elaborate_tm(env, th, scope, *sa));
  return elab_compact(th, scope, resolve(env, th, app.head, at(t)), args, at(t));
}

namespace {

const Def& elaborate_item_inner(Env& env, const Item& item) {
  if (env.find(item.name))
    throw CheckError(ErrorCode::DuplicateVar, "elaborate",
                     "redefinition of '" + item.name + "'", item.span);
  if (item.keyword != Keyword::Let && !theory_has_coh(env.theory))
    throw CheckError(ErrorCode::TheoryViolation, "elaborate",
                     std::string("'") + keyword_name(item.keyword) +
                         "' definitions need Catt or Mcatt, this file is " +
                         theory_name(env.theory),
                     item.span);
  if (item.keyword == Keyword::Mcoh && env.theory != Theory::Mcatt)
    throw CheckError(ErrorCode::TheoryViolation, "elaborate",
                     "'mcoh' definitions need an Mcatt file, this file is " +
                         std::string(theory_name(env.theory)),
                     item.span);

  Theory th = item.keyword == Keyword::Let ? env.theory : Theory::Catt;
  Ctx scope;
  for (const auto& [n, sty] : item.telescope) {
    if (scope.binds(Var{n}))
      throw CheckError(ErrorCode::DuplicateVar, "elaborate",
                       "binder '" + n + "' repeated", item.span);
    scope.push(Var{n}, elaborate_ty(env, th, scope, *sty));
  }
  require_ctx(th, scope);
  TyPtr rty = elaborate_ty(env, th, scope, *item.result_ty);

  Def d;
  d.keyword = item.keyword;
  d.name = item.name;
  d.span = item.span;
  d.telescope = scope;
  d.result_ty = rty;

  if (item.keyword == Keyword::Let) {
    d.theory = env.theory;
    require_ty(th, scope, rty);
    d.body = elaborate_tm(env, th, scope, *item.body);
    require_tm(th, scope, d.body, rty);
  } else {
    d.theory = item.keyword == Keyword::Mcoh ? Theory::Mcatt : Theory::Catt;
    check_ps(scope);
    try {
      require_op_side(scope, rty);
      d.kind = CohKind::Op;
    } catch (const CheckError& op_err) {
      try {
        require_eq_side(scope, rty);
        d.kind = CohKind::Eq;
      } catch (const CheckError& eq_err) {
        throw CheckError(ErrorCode::SideConditionViolation, "coh",
                         "not an operation (" + op_err.detail + "); not a coherence (" +
                             eq_err.detail + ")",
                         item.span);
      }
    }
    if (item.keyword == Keyword::Coh) {
      infer(Theory::Catt, scope,
            tm_coh(d.kind, scope, rty, identity(scope), Theory::Catt));
    } else {
      Ctx mctx = desusp(scope);
      infer(Theory::Mcatt, mctx, tm_coh(d.kind, scope, rty, identity(mctx), Theory::Mcatt));
    }
  }

  env.defs.push_back(std::move(d));
  return env.defs.back();
}

}  // namespace

const Def& elaborate_item(Env& env, const Item& item) {
  try {
    return elaborate_item_inner(env, item);
  } catch (const CheckError& e) {
    Span sp = e.span;
    if (sp.item.empty()) sp.item = item.name;
    if (sp.line == 0) {
      sp.line = item.span.line;
      sp.col = item.span.col;
    }
    throw CheckError(e.code, e.rule, e.detail, sp);
  }
}

Theory theory_for_path(const std::string& path) {
  if (path.ends_with(".mcatt")) return Theory::Mcatt;
  if (path.ends_with(".catt")) return Theory::Catt;
  throw CheckError(ErrorCode::ParseError, "cli",
                   "cannot infer a theory from '" + path + "'; use --theory",
                   Span{path, 0, 0});
}

SourceFile check_text(const std::string& text, const std::string& path, Theory th) {
  ParsedFile f = parse(text, path);
  Env env;
  env.theory = th;
  for (const Item& it : f.items) elaborate_item(env, it);
  return SourceFile{path, th, std::move(env.defs)};
}

SourceFile check_file(const std::string& path, std::optional<Theory> override_th) {
  std::ifstream in(path);
  if (!in)
    throw CheckError(ErrorCode::ParseError, "cli", "cannot read '" + path + "'",
                     Span{path, 0, 0});
  std::stringstream buf;
  buf << in.rdbuf();
  return check_text(buf.str(), path, override_th ? *override_th : theory_for_path(path));
}

// --------------------------------------------------------------- render

namespace {

const Def* find_constructor(const Env& env, const CohTm* c) {
  for (const Def& d : env.defs) {
    if (d.keyword == Keyword::Let) continue;
    bool mfamily = d.keyword == Keyword::Mcoh;
    if (mfamily != (c->theory == Theory::Mcatt)) continue;
    if (d.kind != c->kind) continue;
    auto [p1, t1] = canon_index(d.telescope, d.result_ty);
    auto [p2, t2] = canon_index(c->ps, c->ty);
    if (p1 == p2 && equal(t1, t2)) return &d;
  }
  return nullptr;
}

}  // namespace

std::string render_tm(const Env& env, const TmPtr& t) {
  if (const auto* v = as_var(*t)) return v->v.name;
  if (is_unit_tm(*t)) return "()";
  const auto* c = as_coh(*t);
  const Def* d = find_constructor(env, c);
  if (!d) return show(t);
  std::string out = d->name + " @[";
  bool first = true;
  for (const auto& [x, u] : c->args.assigns) {
    if (!first) out += ", ";
    first = false;
    out += x.name + " := " + render_tm(env, u);
  }
  return out + "]";
}

std::string render_ty(const Env& env, const TyPtr& a) {
  if (is_obj(*a)) return "*";
  if (is_unit(*a)) return "1";
  const auto* h = as_hom(*a);
  return "Hom[" + render_ty(env, h->base) + "](" + render_tm(env, h->src) + ", " +
         render_tm(env, h->tgt) + ")";
}

std::string render_telescope(const Env& env, const Ctx& ctx) {
  std::string out;
  for (const auto& [x, a] : ctx.bindings) {
    if (!out.empty()) out += " ";
    out += "(" + x.name + " : " + render_ty(env, a) + ")";
  }
  return out;
}

std::string render_def(const Env& env, const Def& d) {
  std::string out = keyword_name(d.keyword);
  out += " " + d.name;
  std::string tele = render_telescope(env, d.telescope);
  if (!tele.empty()) out += " " + tele;
  out += " : " + render_ty(env, d.result_ty);
  if (d.keyword == Keyword::Let) out += " = " + render_tm(env, d.body);
  return out;
}

std::string render(const SourceFile& f) {
  Env env;
  env.theory = f.theory;
  env.defs = f.items;
  std::string out;
  for (const Def& d : f.items) out += render_def(env, d) + "\n";
  return out;
}

// --------------------------------------------------------------- reports

std::string report_line(const CheckReport& r) {
  if (r.accepted) return "accepted  " + r.judgment;
  std::string out = "rejected  " + r.judgment;
  if (r.error) {
    out += "\n  " + std::string(error_code_name(r.error->code)) + " [" + r.error->rule +
           "] " + r.error->detail;
    std::string loc = r.error->span.to_string();
    if (!loc.empty()) out += " at " + loc;
  }
  return out;
}

std::string report_json(const CheckReport& r) {
  nlohmann::json span = nlohmann::json::object();
  std::string rule, detail;
  if (r.error) {
    rule = r.error->rule;
    detail = r.error->detail;
    span = {{"item", r.error->span.item},
            {"line", r.error->span.line},
            {"col", r.error->span.col}};
  }
  nlohmann::json j = {{"schema", 1},
                      {"verdict", r.accepted ? "accepted"
                       : r.error  ? error_code_name(r.error->code)
                                  : "rejected"},
                      {"judgment", r.judgment},
                      {"rule", rule},
                      {"span", span},
                      {"detail", detail}};
  return j.dump();
}

}  // namespace mcatt::frontend
