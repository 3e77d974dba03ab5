#include "mcatt/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "mcatt/error.hpp"
#include "mcatt/subst.hpp"

namespace mcatt::oracle {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Found: return "found";
    case Verdict::NotFound: return "not-found";
    case Verdict::OutOfFuel: return "out-of-fuel";
  }
  return "?";
}

// The searcher keeps to its own utility routines; only the syntax tree,
// the canonical renaming and the rendering are shared with the checker.
namespace {

int odim(const TyPtr& a) {
  if (is_unit(*a)) return -2;
  if (is_obj(*a)) return 0;
  return odim(as_hom(*a)->base) + 1;
}

void ovars(const TyPtr& a, std::set<Var>& out);

void ovars(const TmPtr& t, std::set<Var>& out) {
  if (const auto* v = as_var(*t)) {
    out.insert(v->v);
  } else if (const auto* c = as_coh(*t)) {
    for (const auto& [x, u] : c->args.assigns) ovars(u, out);
  }
}

void ovars(const TyPtr& a, std::set<Var>& out) {
  if (const auto* h = as_hom(*a)) {
    ovars(h->base, out);
    ovars(h->src, out);
    ovars(h->tgt, out);
  }
}

std::optional<TmPtr> oapply_tm(const TmPtr& t, const Sub& s);

std::optional<TyPtr> oapply_ty(const TyPtr& a, const Sub& s) {
  if (const auto* h = as_hom(*a)) {
    auto b = oapply_ty(h->base, s);
    auto x = oapply_tm(h->src, s);
    auto y = oapply_tm(h->tgt, s);
    if (!b || !x || !y) return std::nullopt;
    return ty_hom(*b, *x, *y);
  }
  return a;
}

std::optional<TmPtr> oapply_tm(const TmPtr& t, const Sub& s) {
  if (const auto* v = as_var(*t)) return s.lookup(v->v) ? std::optional(*s.lookup(v->v)) : std::nullopt;
  if (const auto* c = as_coh(*t)) {
    Sub args;
    for (const auto& [x, u] : c->args.assigns) {
      auto w = oapply_tm(u, s);
      if (!w) return std::nullopt;
      args.push(x, *w);
    }
    return tm_coh(c->kind, c->ps, c->ty, std::move(args), c->theory);
  }
  return t;
}

TyPtr odesusp_ty(const TyPtr& a) {
  if (is_obj(*a)) return ty_unit();
  const auto* h = as_hom(*a);
  return ty_hom(odesusp_ty(h->base), h->src, h->tgt);
}

Ctx odesusp_ctx(const Ctx& ctx) {
  Ctx out;
  for (const auto& [x, a] : ctx.bindings) out.push(x, odesusp_ty(a));
  return out;
}

// Note: the full desuspension also rewrites constructor families inside
// terms. The searcher only needs it for index data, whose types are
// variable-based, so the term positions are carried over unchanged above;
// term translation is handled where needed below.
TmPtr odesusp_tm(const TmPtr& t) {
  if (const auto* c = as_coh(*t)) {
    Sub args;
    for (const auto& [x, u] : c->args.assigns) args.push(x, odesusp_tm(u));
    return tm_coh(c->kind, c->ps, c->ty, std::move(args), Theory::Mcatt);
  }
  return t;
}

TyPtr odesusp_ty_full(const TyPtr& a) {
  if (is_obj(*a)) return ty_unit();
  const auto* h = as_hom(*a);
  return ty_hom(odesusp_ty_full(h->base), odesusp_tm(h->src), odesusp_tm(h->tgt));
}

bool ounit_theory(Theory th) { return th == Theory::GlobUnit || th == Theory::Mcatt; }

TmPtr onorm_tm(const TmPtr& t, const Ctx& ctx);

TyPtr onorm_ty(const TyPtr& a, const Ctx& ctx) {
  if (is_obj(*a)) return ty_hom(ty_unit(), tm_unit(), tm_unit());
  if (const auto* h = as_hom(*a))
    return ty_hom(onorm_ty(h->base, ctx), onorm_tm(h->src, ctx), onorm_tm(h->tgt, ctx));
  return a;
}

TmPtr onorm_tm(const TmPtr& t, const Ctx& ctx) {
  if (const auto* v = as_var(*t)) {
    auto a = ctx.lookup(v->v);
    if (a && is_unit(**a)) return tm_unit();
    return t;
  }
  if (const auto* c = as_coh(*t)) {
    Sub args;
    for (size_t i = 0; i < c->args.assigns.size(); ++i) {
      const auto& [x, u] = c->args.assigns[i];
      bool unit_slot = c->theory == Theory::Mcatt && i < c->ps.bindings.size() &&
                       is_obj(*c->ps.bindings[i].second);
      args.push(x, unit_slot ? tm_unit() : onorm_tm(u, ctx));
    }
    return tm_coh(c->kind, c->ps, c->ty, std::move(args), c->theory);
  }
  return t;
}

bool oeq_ty(Theory th, const Ctx& ctx, const TyPtr& a, const TyPtr& b) {
  if (ounit_theory(th)) return equal(canon(onorm_ty(a, ctx)), canon(onorm_ty(b, ctx)));
  return equal(canon(a), canon(b));
}

struct Search {
  long fuel;
  bool starved = false;

  bool tick() {
    if (fuel <= 0) {
      starved = true;
      return false;
    }
    --fuel;
    return true;
  }

  bool ctx(Theory th, const Ctx& g);
  bool ty(Theory th, const Ctx& g, const TyPtr& a);
  bool tm(Theory th, const Ctx& g, const TmPtr& t, const TyPtr& a);
  bool sub(Theory th, const Ctx& d, const Sub& s, const Ctx& g);
  bool ps(const Ctx& g);
  bool psx(const Ctx& g, const Var& x, const TyPtr& a);
  bool op(const Ctx& g, const TyPtr& a);
  bool eqside(const Ctx& g, const TyPtr& a);
};

bool Search::ctx(Theory th, const Ctx& g) {
  if (!tick()) return false;
  if (g.empty()) return true;
  const auto& [x, a] = g.bindings.back();
  Ctx front = g.prefix(g.size() - 1);
  if (front.binds(x)) return false;
  return ty(th, front, a);
}

bool Search::ty(Theory th, const Ctx& g, const TyPtr& a) {
  if (!tick()) return false;
  if (is_obj(*a)) {
    if (th == Theory::Glob || th == Theory::Catt) return ctx(th, g);
    // shorthand for Hom(1,(),()) in the unit theories
    return tm(th, g, tm_unit(), ty_unit()) && tm(th, g, tm_unit(), ty_unit());
  }
  if (is_unit(*a)) return ounit_theory(th) && ctx(th, g);
  const auto* h = as_hom(*a);
  return ty(th, g, h->base) && tm(th, g, h->src, h->base) && tm(th, g, h->tgt, h->base);
}

bool Search::tm(Theory th, const Ctx& g, const TmPtr& t, const TyPtr& a) {
  if (!tick()) return false;
  if (const auto* v = as_var(*t)) {
    auto b = g.lookup(v->v);
    if (!b) return false;
    return oeq_ty(th, g, *b, a) && ctx(th, g);
  }
  if (is_unit_tm(*t)) return ounit_theory(th) && oeq_ty(th, g, a, ty_unit()) && ctx(th, g);

  const auto* c = as_coh(*t);
  if (th == Theory::Glob || th == Theory::GlobUnit) return false;
  if (c->theory != th) return false;
  if (!ps(c->ps)) return false;
  if (c->kind == CohKind::Op ? !op(c->ps, c->ty) : !eqside(c->ps, c->ty)) return false;
  if (th == Theory::Catt) {
    if (!sub(th, g, c->args, c->ps)) return false;
    auto got = oapply_ty(c->ty, c->args);
    return got && oeq_ty(th, g, *got, a);
  }
  Ctx target = odesusp_ctx(c->ps);
  if (!sub(th, g, c->args, target)) return false;
  auto got = oapply_ty(odesusp_ty_full(c->ty), c->args);
  return got && oeq_ty(th, g, *got, a);
}

bool Search::sub(Theory th, const Ctx& d, const Sub& s, const Ctx& g) {
  if (!tick()) return false;
  if (s.size() != g.size()) return false;
  if (s.empty()) return ctx(th, d);
  const auto& [x, t] = s.assigns.back();
  const auto& [y, a] = g.bindings.back();
  if (x != y) return false;
  Sub sf = s.prefix(s.size() - 1);
  Ctx gf = g.prefix(g.size() - 1);
  if (!sub(th, d, sf, gf)) return false;
  if (!ty(th, gf, a)) return false;
  auto expect = oapply_ty(a, sf);
  return expect && tm(th, d, t, *expect);
}

bool Search::ps(const Ctx& g) {
  if (!tick()) return false;
  for (const auto& [x, a] : g.bindings)
    if (is_obj(*a) && psx(g, x, ty_obj())) return true;
  return false;
}

bool Search::psx(const Ctx& g, const Var& x, const TyPtr& a) {
  if (!tick()) return false;
  // pss
  if (g.size() == 1 && g.bindings[0].first == x && is_obj(*g.bindings[0].second) &&
      is_obj(*a))
    return true;
  // pse: the context ends with the pair this judgment introduces
  if (g.size() >= 3) {
    const auto& [y, b] = g.bindings[g.size() - 2];
    const auto& [f, c] = g.bindings.back();
    if (f == x && equal(c, a)) {
      if (const auto* h = as_hom(*c)) {
        const auto* z = as_var(*h->src);
        const auto* w = as_var(*h->tgt);
        if (z && w && w->v == y && equal(h->base, b)) {
          Ctx front = g.prefix(g.size() - 2);
          if (!front.binds(y) && !front.binds(f) && psx(front, z->v, b)) return true;
        }
      }
    }
  }
  // psd: some filler above x witnesses it as a target
  for (const auto& [f, c] : g.bindings) {
    const auto* h = as_hom(*c);
    if (!h) continue;
    const auto* w = as_var(*h->tgt);
    if (!w || w->v != x) continue;
    if (!equal(h->base, a)) continue;
    if (psx(g, f, c)) return true;
  }
  return false;
}

Ctx oboundary(const Ctx& g, int i, Side side) {
  std::set<Var> sources, targets;
  for (const auto& [x, a] : g.bindings) {
    if (const auto* h = as_hom(*a)) {
      if (const auto* s = as_var(*h->src)) sources.insert(s->v);
      if (const auto* t = as_var(*h->tgt)) targets.insert(t->v);
    }
  }
  Ctx out;
  for (const auto& [x, a] : g.bindings) {
    int d = odim(a);
    if (d < i) {
      out.push(x, a);
    } else if (d == i) {
      const std::set<Var>& excluded = side == Side::Src ? targets : sources;
      if (!excluded.count(x)) out.push(x, a);
    }
  }
  return out;
}

bool Search::op(const Ctx& g, const TyPtr& a) {
  if (!tick()) return false;
  const auto* h = as_hom(*a);
  if (!h) return false;
  int d = -1;
  for (const auto& [x, b] : g.bindings) d = std::max(d, odim(b));
  if (d <= 0) return false;
  Ctx sctx = oboundary(g, d - 1, Side::Src);
  Ctx tctx = oboundary(g, d - 1, Side::Tgt);
  if (!tm(Theory::Catt, sctx, h->src, h->base)) return false;
  if (!tm(Theory::Catt, tctx, h->tgt, h->base)) return false;
  std::set<Var> sv, tv;
  ovars(h->src, sv);
  ovars(h->base, sv);
  ovars(h->tgt, tv);
  ovars(h->base, tv);
  return sv == var_set(sctx) && tv == var_set(tctx);
}

bool Search::eqside(const Ctx& g, const TyPtr& a) {
  if (!tick()) return false;
  const auto* h = as_hom(*a);
  if (!h) return false;
  if (!tm(Theory::Catt, g, h->src, h->base)) return false;
  if (!tm(Theory::Catt, g, h->tgt, h->base)) return false;
  std::set<Var> sv, tv;
  ovars(h->src, sv);
  ovars(h->base, sv);
  ovars(h->tgt, tv);
  ovars(h->base, tv);
  return sv == var_set(g) && tv == var_set(g);
}

}  // namespace

Verdict derivation_search(const Judgment& j, long fuel) {
  Search s{fuel};
  bool found = std::visit(
      [&](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, JCtx>) return s.ctx(g.th, g.ctx);
        if constexpr (std::is_same_v<T, JTy>) return s.ty(g.th, g.ctx, g.ty);
        if constexpr (std::is_same_v<T, JTm>) return s.tm(g.th, g.ctx, g.tm, g.ty);
        if constexpr (std::is_same_v<T, JSub>) return s.sub(g.th, g.dom, g.sub, g.tgt);
        if constexpr (std::is_same_v<T, JPs>) return s.ps(g.ctx);
        if constexpr (std::is_same_v<T, JOp>) return s.ps(g.ctx) && s.op(g.ctx, g.ty);
        if constexpr (std::is_same_v<T, JEq>) return s.ps(g.ctx) && s.eqside(g.ctx, g.ty);
        return false;
      },
      j);
  if (found) return Verdict::Found;
  return s.starved ? Verdict::OutOfFuel : Verdict::NotFound;
}

Ctx boundary_globular(const Ctx& ctx, int i, Side side) {
  if (i < 0)
    throw CheckError(ErrorCode::BoundaryUndefined, "boundary",
                     "no boundary at negative dimension");
  return oboundary(ctx, i, side);
}

namespace {

void grow_ps(const Ctx& ctx, Var dangling_var, TyPtr dangling_ty, int max_vars,
             std::vector<Ctx>& out) {
  if ((int)ctx.size() + 2 > max_vars) return;
  // walk the marker down to every level and try gluing a pair there
  Var dv = dangling_var;
  TyPtr dt = dangling_ty;
  std::vector<std::pair<Var, TyPtr>> levels{{dv, dt}};
  while (const auto* h = as_hom(*dt)) {
    dv = as_var(*h->tgt)->v;
    dt = h->base;
    levels.emplace_back(dv, dt);
  }
  for (const auto& [x, t] : levels) {
    Var y{"v" + std::to_string(ctx.size())};
    Var f{"v" + std::to_string(ctx.size() + 1)};
    TyPtr c = ty_hom(t, tm_var(x), tm_var(y));
    Ctx next = ctx;
    next.push(y, t);
    next.push(f, c);
    out.push_back(next);
    grow_ps(next, f, c, max_vars, out);
  }
}

}  // namespace

std::vector<Ctx> enumerate_ps(int max_vars) {
  std::vector<Ctx> out;
  if (max_vars < 1) return out;
  Ctx point;
  point.push(Var{"v0"}, ty_obj());
  out.push_back(point);
  grow_ps(point, Var{"v0"}, ty_obj(), max_vars, out);
  std::sort(out.begin(), out.end(), [](const Ctx& a, const Ctx& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return show(a) < show(b);
  });
  return out;
}

namespace {

void grow_glob(const Ctx& ctx, int max_binders, std::vector<Ctx>& out) {
  if ((int)ctx.size() >= max_binders) return;
  Var x{"v" + std::to_string(ctx.size())};
  std::vector<TyPtr> types{ty_obj()};
  for (const auto& [a, ta] : ctx.bindings)
    for (const auto& [b, tb] : ctx.bindings)
      if (equal(ta, tb)) types.push_back(ty_hom(ta, tm_var(a), tm_var(b)));
  for (const TyPtr& t : types) {
    Ctx next = ctx;
    next.push(x, t);
    out.push_back(next);
    grow_glob(next, max_binders, out);
  }
}

void grow_paired(const Ctx& ctx, int max_binders, std::vector<Ctx>& out) {
  if ((int)ctx.size() + 2 > max_binders) return;
  for (const auto& [x, t] : ctx.bindings) {
    Var y{"v" + std::to_string(ctx.size())};
    Var f{"v" + std::to_string(ctx.size() + 1)};
    Ctx next = ctx;
    next.push(y, t);
    next.push(f, ty_hom(t, tm_var(x), tm_var(y)));
    out.push_back(next);
    grow_paired(next, max_binders, out);
  }
}

}  // namespace

std::vector<Ctx> enumerate_glob_ctxs(int max_binders) {
  std::vector<Ctx> out;
  out.push_back(Ctx{});
  grow_glob(Ctx{}, max_binders, out);
  return out;
}

std::vector<Ctx> enumerate_paired_ctxs(int max_binders) {
  std::vector<Ctx> out;
  if (max_binders < 1) return out;
  Ctx point;
  point.push(Var{"v0"}, ty_obj());
  out.push_back(point);
  grow_paired(point, max_binders, out);
  return out;
}

std::pair<TmPtr, TyPtr> full_composite(const Ctx& ps_ctx) {
  if (ps_ctx.size() == 1)
    return {tm_var(ps_ctx.bindings[0].first), ps_ctx.bindings[0].second};
  auto [s, ts] = full_composite(src(ps_ctx));
  auto [t, tt] = full_composite(tgt(ps_ctx));
  TyPtr a = ty_hom(ts, s, t);
  return {tm_coh(CohKind::Op, ps_ctx, a, identity(ps_ctx), Theory::Catt), a};
}

std::pair<TmPtr, TyPtr> composite_coherence(const Ctx& ps_ctx) {
  auto [c, tc] = full_composite(ps_ctx);
  // over the point the composite is the variable and this is the identity
  TyPtr a = ty_hom(tc, c, c);
  return {tm_coh(CohKind::Eq, ps_ctx, a, identity(ps_ctx), Theory::Catt), a};
}

Gen::Gen(uint64_t seed) : rng_(seed), ps_library_(enumerate_ps(5)) {}

int Gen::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

const PoolEntry* Gen::find_pool(const GenCtx& g, const TyPtr& want) {
  std::vector<const PoolEntry*> hits;
  for (const auto& e : g.pool)
    if (equal(canon(e.ty), canon(want))) hits.push_back(&e);
  if (hits.empty()) return nullptr;
  return hits[pick((int)hits.size())];
}

void Gen::enrich(GenCtx& g, int max_depth) {
  const Ctx& idx = ps_library_[pick((int)ps_library_.size())];
  bool want_op = pick(2) == 0 && idx.size() > 1;
  auto [head, a] = want_op ? full_composite(idx) : composite_coherence(idx);
  const auto* coh = as_coh(*head);
  if (!coh) return;  // the composite over the point is a bare variable
  Sub args;
  int depth = 0;
  for (const auto& [x, b] : idx.bindings) {
    TyPtr want = mcatt::apply(b, args);
    const PoolEntry* e = find_pool(g, want);
    if (!e || e->depth + 1 > max_depth) return;
    depth = std::max(depth, e->depth);
    args.push(x, e->tm);
  }
  TmPtr tm = tm_coh(coh->kind, idx, coh->ty, args, Theory::Catt);
  g.pool.push_back({tm, mcatt::apply(coh->ty, args), depth + 1});
}

GenCtx Gen::sample_ctx(int binders, int max_depth) {
  GenCtx g;
  for (int i = 0; i < binders; ++i) {
    TyPtr ty = ty_obj();
    if (!g.pool.empty() && pick(3) != 0) {
      const PoolEntry& e1 = g.pool[pick((int)g.pool.size())];
      if (const PoolEntry* e2 = find_pool(g, e1.ty)) ty = ty_hom(e1.ty, e1.tm, e2->tm);
    }
    Var x{"c" + std::to_string(i)};
    g.ctx.push(x, ty);
    g.pool.push_back({tm_var(x), ty, 0});
    if (max_depth > 0 && pick(2) == 0) enrich(g, max_depth);
  }
  for (int i = 0; i < binders && max_depth > 0; ++i) enrich(g, max_depth);
  return g;
}

TyPtr Gen::sample_ty(GenCtx& g, int max_depth) {
  if (g.pool.empty()) return ty_obj();
  if (max_depth > 0 && pick(2) == 0) enrich(g, max_depth);
  const PoolEntry& e1 = g.pool[pick((int)g.pool.size())];
  if (pick(4) == 0) return e1.ty;
  if (const PoolEntry* e2 = find_pool(g, e1.ty)) return ty_hom(e1.ty, e1.tm, e2->tm);
  return ty_obj();
}

Sub Gen::sample_sub(GenCtx& dom, const Ctx& tgt) {
  Sub out;
  for (const auto& [y, a] : tgt.bindings) {
    TyPtr want = mcatt::apply(a, out);
    const PoolEntry* e = find_pool(dom, want);
    TmPtr t;
    if (e) {
      t = e->tm;
    } else {
      Var w{"w" + std::to_string(fresh_++)};
      dom.ctx.push(w, want);
      dom.pool.push_back({tm_var(w), want, 0});
      t = tm_var(w);
    }
    out.push(y, t);
  }
  return out;
}

Ctx Gen::sample_mcatt_ctx(const Ctx& catt_ctx) {
  Ctx out;
  int units = 0;
  for (const auto& [x, a] : catt_ctx.bindings) {
    if (pick(4) == 0) out.push(Var{"u" + std::to_string(units++)}, ty_unit());
    out.push(x, odesusp_ty_full(a));
  }
  if (pick(4) == 0) out.push(Var{"u" + std::to_string(units++)}, ty_unit());
  return out;
}

}  // namespace mcatt::oracle
