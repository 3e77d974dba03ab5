#include "mcatt/syntax.hpp"

#include <algorithm>

namespace mcatt {

const char* theory_name(Theory th) {
  switch (th) {
    case Theory::Glob: return "glob";
    case Theory::Catt: return "catt";
    case Theory::GlobUnit: return "glob1";
    case Theory::Mcatt: return "mcatt";
  }
  return "?";
}

bool theory_has_unit(Theory th) { return th == Theory::GlobUnit || th == Theory::Mcatt; }
bool theory_has_coh(Theory th) { return th == Theory::Catt || th == Theory::Mcatt; }

std::optional<TyPtr> Ctx::lookup(const Var& x) const {
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
    if (it->first == x) return it->second;
  return std::nullopt;
}

Ctx& Ctx::push(Var x, TyPtr a) {
  bindings.emplace_back(std::move(x), std::move(a));
  return *this;
}

Ctx Ctx::prefix(size_t n) const {
  Ctx out;
  out.bindings.assign(bindings.begin(), bindings.begin() + std::min(n, bindings.size()));
  return out;
}

bool Ctx::operator==(const Ctx& other) const {
  if (bindings.size() != other.bindings.size()) return false;
  for (size_t i = 0; i < bindings.size(); ++i) {
    if (bindings[i].first != other.bindings[i].first) return false;
    if (!equal(bindings[i].second, other.bindings[i].second)) return false;
  }
  return true;
}

std::optional<TmPtr> Sub::lookup(const Var& x) const {
  for (auto it = assigns.rbegin(); it != assigns.rend(); ++it)
    if (it->first == x) return it->second;
  return std::nullopt;
}

Sub& Sub::push(Var x, TmPtr t) {
  assigns.emplace_back(std::move(x), std::move(t));
  return *this;
}

Sub Sub::prefix(size_t n) const {
  Sub out;
  out.assigns.assign(assigns.begin(), assigns.begin() + std::min(n, assigns.size()));
  return out;
}

bool Sub::operator==(const Sub& other) const {
  if (assigns.size() != other.assigns.size()) return false;
  for (size_t i = 0; i < assigns.size(); ++i) {
    if (assigns[i].first != other.assigns[i].first) return false;
    if (!equal(assigns[i].second, other.assigns[i].second)) return false;
  }
  return true;
}

TyPtr ty_obj() {
  static const TyPtr obj = std::make_shared<const Ty>(Ty{ObjTy{}});
  return obj;
}

TyPtr ty_unit() {
  static const TyPtr unit = std::make_shared<const Ty>(Ty{UnitTy{}});
  return unit;
}

TyPtr ty_hom(TyPtr base, TmPtr src, TmPtr tgt) {
  return std::make_shared<const Ty>(Ty{HomTy{std::move(base), std::move(src), std::move(tgt)}});
}

TmPtr tm_var(Var v) { return std::make_shared<const Tm>(Tm{VarTm{std::move(v)}}); }
TmPtr tm_var(const std::string& name) { return tm_var(Var{name}); }

TmPtr tm_unit() {
  static const TmPtr u = std::make_shared<const Tm>(Tm{UnitTm{}});
  return u;
}

TmPtr tm_coh(CohKind kind, Ctx ps, TyPtr ty, Sub args, Theory theory) {
  return std::make_shared<const Tm>(
      Tm{CohTm{kind, std::move(ps), std::move(ty), std::move(args), theory}});
}

bool operator==(const Ty& a, const Ty& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* h = std::get_if<HomTy>(&a.node)) {
    const auto& k = std::get<HomTy>(b.node);
    return equal(h->base, k.base) && equal(h->src, k.src) && equal(h->tgt, k.tgt);
  }
  return true;
}

bool operator==(const Tm& t, const Tm& u) {
  if (t.node.index() != u.node.index()) return false;
  if (const auto* v = std::get_if<VarTm>(&t.node)) return v->v == std::get<VarTm>(u.node).v;
  if (const auto* c = std::get_if<CohTm>(&t.node)) {
    const auto& d = std::get<CohTm>(u.node);
    return c->kind == d.kind && c->theory == d.theory && c->ps == d.ps &&
           equal(c->ty, d.ty) && c->args == d.args;
  }
  return true;
}

bool equal(const TyPtr& a, const TyPtr& b) { return a == b || *a == *b; }
bool equal(const TmPtr& t, const TmPtr& u) { return t == u || *t == *u; }

int dim(const Ty& a) {
  if (is_obj(a)) return 0;
  if (is_unit(a)) return -2;
  return dim(as_hom(a)->base) + 1;
}

int dim(const TyPtr& a) { return dim(*a); }

int dim(const Ctx& ctx) {
  int d = -1;
  for (const auto& [x, a] : ctx.bindings) d = std::max(d, dim(a));
  return d;
}

namespace {

void collect(const TyPtr& a, std::set<Var>& out);

void collect(const TmPtr& t, std::set<Var>& out) {
  if (const auto* v = as_var(*t)) {
    out.insert(v->v);
  } else if (const auto* c = as_coh(*t)) {
    // Free variables of a coherence are those of its arguments; the index
    // pair binds its own scope.
    for (const auto& [x, u] : c->args.assigns) collect(u, out);
  }
}

void collect(const TyPtr& a, std::set<Var>& out) {
  if (const auto* h = as_hom(*a)) {
    collect(h->base, out);
    collect(h->src, out);
    collect(h->tgt, out);
  }
}

}  // namespace

std::set<Var> var_set(const TyPtr& a) {
  std::set<Var> out;
  collect(a, out);
  return out;
}

std::set<Var> var_set(const TmPtr& t) {
  std::set<Var> out;
  collect(t, out);
  return out;
}

std::set<Var> var_set(const Sub& s) {
  std::set<Var> out;
  for (const auto& [x, t] : s.assigns) collect(t, out);
  return out;
}

std::set<Var> var_set(const Ctx& ctx) {
  std::set<Var> out;
  for (const auto& [x, a] : ctx.bindings) out.insert(x);
  return out;
}

bool well_scoped(const Ctx& ctx) {
  std::set<Var> seen;
  for (const auto& [x, a] : ctx.bindings) {
    if (seen.count(x)) return false;
    for (const Var& y : var_set(a))
      if (!seen.count(y)) return false;
    seen.insert(x);
  }
  return true;
}

TyPtr rename(const TyPtr& a, const Renaming& r) {
  if (const auto* h = as_hom(*a))
    return ty_hom(rename(h->base, r), rename(h->src, r), rename(h->tgt, r));
  return a;
}

TmPtr rename(const TmPtr& t, const Renaming& r) {
  if (const auto* v = as_var(*t)) {
    auto it = r.find(v->v);
    return it == r.end() ? t : tm_var(it->second);
  }
  if (const auto* c = as_coh(*t))
    return tm_coh(c->kind, c->ps, c->ty, rename_assigns(c->args, r), c->theory);
  return t;
}

Sub rename_assigns(const Sub& s, const Renaming& r) {
  Sub out;
  for (const auto& [x, t] : s.assigns) out.push(x, rename(t, r));
  return out;
}

Ctx rename(const Ctx& ctx, const Renaming& r) {
  Ctx out;
  for (const auto& [x, a] : ctx.bindings) {
    auto it = r.find(x);
    out.push(it == r.end() ? x : it->second, rename(a, r));
  }
  return out;
}

namespace {

Renaming canonical_renaming(const Ctx& ctx) {
  Renaming r;
  int i = 0;
  for (const auto& [x, a] : ctx.bindings) r[x] = Var{"v" + std::to_string(i++)};
  return r;
}

}  // namespace

Ctx canon_ctx(const Ctx& ctx) {
  Renaming r = canonical_renaming(ctx);
  Ctx out;
  for (const auto& [x, a] : ctx.bindings) out.push(r.at(x), rename(canon(a), r));
  return out;
}

TyPtr canon(const TyPtr& a) {
  if (const auto* h = as_hom(*a))
    return ty_hom(canon(h->base), canon(h->src), canon(h->tgt));
  return a;
}

TmPtr canon(const TmPtr& t) {
  if (const auto* c = as_coh(*t)) {
    Renaming r = canonical_renaming(c->ps);
    Ctx ps;
    for (const auto& [x, a] : c->ps.bindings) ps.push(r.at(x), rename(canon(a), r));
    TyPtr ty = rename(canon(c->ty), r);
    Sub args;
    for (const auto& [x, u] : c->args.assigns) args.push(r.at(x), canon(u));
    return tm_coh(c->kind, std::move(ps), std::move(ty), std::move(args), c->theory);
  }
  return t;
}

namespace {

bool is_obj_sugar(const Ty& a) {
  const auto* h = as_hom(a);
  return h && is_unit(*h->base) && is_unit_tm(*h->src) && is_unit_tm(*h->tgt);
}

std::string coh_head_name(const CohTm& c) {
  if (c.theory == Theory::Mcatt) return c.kind == CohKind::Op ? "mop" : "mcoh";
  return c.kind == CohKind::Op ? "cohop" : "coh";
}

}  // namespace

std::string show(const TyPtr& a) {
  if (is_obj(*a)) return "*";
  if (is_unit(*a)) return "1";
  if (is_obj_sugar(*a)) return "*";
  const auto* h = as_hom(*a);
  return show(h->src) + " -> " + show(h->tgt);
}

std::string show(const TmPtr& t) {
  if (const auto* v = as_var(*t)) return v->v.name;
  if (is_unit_tm(*t)) return "()";
  const auto* c = as_coh(*t);
  std::string out = coh_head_name(*c) + "{" + show(c->ps) + " : " + show(c->ty) + "}[";
  bool first = true;
  for (const auto& [x, u] : c->args.assigns) {
    if (!first) out += ", ";
    first = false;
    out += show(u);
  }
  return out + "]";
}

std::string show(const Ctx& ctx) {
  std::string out;
  for (const auto& [x, a] : ctx.bindings) {
    if (!out.empty()) out += " ";
    out += "(" + x.name + " : " + show(a) + ")";
  }
  return out;
}

std::string show(const Sub& s) {
  std::string out = "<";
  bool first = true;
  for (const auto& [x, t] : s.assigns) {
    if (!first) out += ", ";
    first = false;
    out += x.name + " := " + show(t);
  }
  return out + ">";
}

}  // namespace mcatt
