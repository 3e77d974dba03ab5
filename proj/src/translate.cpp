#include "mcatt/translate.hpp"

#include "mcatt/subst.hpp"

namespace mcatt {

namespace {

[[noreturn]] void not_catt(const std::string& what) {
  throw CheckError(ErrorCode::TheoryViolation, "desusp", "input is not Catt syntax: " + what);
}

TmPtr base_var() { return tm_var(Var::base()); }

}  // namespace

TyPtr desusp(const TyPtr& a) {
  if (is_obj(*a)) return ty_unit();
  if (const auto* h = as_hom(*a))
    return ty_hom(desusp(h->base), desusp(h->src), desusp(h->tgt));
  not_catt(show(a));
}

TmPtr desusp(const TmPtr& t) {
  if (is_var(*t)) return t;
  if (const auto* c = as_coh(*t)) {
    if (c->theory != Theory::Catt) not_catt(show(t));
    return tm_coh(c->kind, c->ps, c->ty, desusp(c->args), Theory::Mcatt);
  }
  not_catt(show(t));
}

Sub desusp(const Sub& s) {
  Sub out;
  for (const auto& [x, t] : s.assigns) out.push(x, desusp(t));
  return out;
}

Ctx desusp(const Ctx& ctx) {
  Ctx out;
  for (const auto& [x, a] : ctx.bindings) out.push(x, desusp(a));
  return out;
}

TyPtr rsusp(const TyPtr& a, const Ctx& ambient) {
  if (is_unit(*a)) return ty_obj();
  if (is_obj(*a)) return ty_hom(ty_obj(), base_var(), base_var());
  const auto* h = as_hom(*a);
  return ty_hom(rsusp(h->base, ambient), rsusp(h->src, ambient), rsusp(h->tgt, ambient));
}

TmPtr rsusp(const TmPtr& t, const Ctx& ambient) {
  if (is_unit_tm(*t)) return base_var();
  if (const auto* v = as_var(*t)) {
    auto a = ambient.lookup(v->v);
    if (!a)
      throw CheckError(ErrorCode::UnboundVariable, "rsusp",
                       "variable " + v->v.name + " not in context");
    if (is_unit(**a))
      throw CheckError(ErrorCode::NotNormalized, "rsusp",
                       "variable " + v->v.name + " has unit type; normalize first");
    return t;
  }
  const auto* c = as_coh(*t);
  if (c->theory != Theory::Mcatt)
    throw CheckError(ErrorCode::TheoryViolation, "rsusp",
                     "input is not Mcatt syntax: " + show(t));
  Sub lifted = rsusp(c->args, desusp(c->ps), ambient);
  return tm_coh(c->kind, c->ps, c->ty, compose(red_sub(c->ps), lifted), Theory::Catt);
}

Sub rsusp(const Sub& s, const Ctx& target, const Ctx& ambient) {
  if (s.size() != target.size())
    throw CheckError(ErrorCode::ArityMismatch, "rsusp",
                     "substitution has " + std::to_string(s.size()) +
                         " components, target expects " + std::to_string(target.size()));
  Sub out;
  out.push(Var::base(), base_var());
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& [x, a] = target.bindings[i];
    if (is_unit(*a)) continue;
    out.push(x, rsusp(s.assigns[i].second, ambient));
  }
  return out;
}

Ctx rsusp(const Ctx& ctx) {
  Ctx out;
  out.push(Var::base(), ty_obj());
  for (const auto& [x, a] : ctx.bindings) {
    if (is_unit(*a)) continue;
    if (x.reserved)
      throw CheckError(ErrorCode::NotNormalized, "rsusp",
                       "context already binds the reserved base variable");
    out.push(x, rsusp(a, ctx));
  }
  return out;
}

Sub red_sub(const Ctx& ctx) {
  Sub out;
  for (const auto& [x, a] : ctx.bindings)
    out.push(x, is_obj(*a) ? base_var() : tm_var(x));
  return out;
}

EtaPair eta(const Ctx& ctx) {
  EtaPair p;
  p.fwd.push(Var::base(), tm_unit());
  for (const auto& [x, a] : ctx.bindings) {
    if (is_unit(*a)) {
      p.inv.push(x, tm_unit());
    } else {
      p.fwd.push(x, tm_var(x));
      p.inv.push(x, tm_var(x));
    }
  }
  return p;
}

namespace {

Theory target_theory(Direction dir) {
  return dir == Direction::Desusp ? Theory::Mcatt : Theory::Catt;
}

template <class F>
CheckReport run_translation(Theory th, F body) {
  try {
    return body();
  } catch (const CheckError& e) {
    CheckReport r;
    r.theory = th;
    r.accepted = false;
    r.judgment = "(translation failed)";
    r.error = ErrorInfo::from(e);
    return r;
  }
}

}  // namespace

CheckReport translate_ctx_correct(Direction dir, const Ctx& ctx) {
  Theory th = target_theory(dir);
  return run_translation(th, [&] {
    if (dir == Direction::Desusp) return check_ctx(th, desusp(ctx));
    return check_ctx(th, rsusp(normalize_ctx(Theory::Mcatt, ctx)));
  });
}

CheckReport translate_ty_correct(Direction dir, const Ctx& ctx, const TyPtr& a) {
  Theory th = target_theory(dir);
  return run_translation(th, [&] {
    if (dir == Direction::Desusp) return check_ty(th, desusp(ctx), desusp(a));
    Ctx n = normalize_ctx(Theory::Mcatt, ctx);
    return check_ty(th, rsusp(n), rsusp(normalize(Theory::Mcatt, a, n), n));
  });
}

CheckReport translate_tm_correct(Direction dir, const Ctx& ctx, const TmPtr& t) {
  Theory th = target_theory(dir);
  return run_translation(th, [&] {
    if (dir == Direction::Desusp) return infer_tm(th, desusp(ctx), desusp(t));
    Ctx n = normalize_ctx(Theory::Mcatt, ctx);
    return infer_tm(th, rsusp(n), rsusp(normalize(Theory::Mcatt, t, n), n));
  });
}

CheckReport translate_sub_correct(Direction dir, const Ctx& dom, const Sub& s, const Ctx& tgt) {
  Theory th = target_theory(dir);
  return run_translation(th, [&] {
    if (dir == Direction::Desusp)
      return check_sub(th, desusp(dom), desusp(s), desusp(tgt));
    Ctx nd = normalize_ctx(Theory::Mcatt, dom);
    Ctx nt = normalize_ctx(Theory::Mcatt, tgt);
    Sub ns = normalize(Theory::Mcatt, s, nd);
    return check_sub(th, rsusp(nd), rsusp(ns, nt, nd), rsusp(nt));
  });
}

AdjReport verify_adjunction(const Ctx& catt_ctx, const Ctx& mcatt_ctx) {
  AdjReport r;
  r.catt_ctx = catt_ctx;
  r.mcatt_ctx = mcatt_ctx;

  // Triangle on the desuspension side, up to definitional equality.
  Ctx dc = desusp(catt_ctx);
  Sub t1 = compose(desusp(red_sub(catt_ctx)), eta(dc).fwd);
  r.triangle1_holds = sub_defeq(Theory::Mcatt, dc, t1, identity(dc));
  if (!r.triangle1_holds)
    r.counterexample = "desusp(counit) after eta is " + show(t1) + " on " + show(dc);

  // Triangle on the reduced suspension side, syntactic.
  Ctx nm = normalize_ctx(Theory::Mcatt, mcatt_ctx);
  Ctx sm = rsusp(nm);
  EtaPair em = eta(nm);
  Sub seta = rsusp(normalize(Theory::Mcatt, em.fwd, nm), desusp(sm), nm);
  Sub t2 = compose(red_sub(sm), seta);
  r.triangle2_holds = sub_defeq(Theory::Catt, sm, t2, identity(sm));
  if (!r.triangle2_holds && r.counterexample.empty())
    r.counterexample = "counit after rsusp(eta) is " + show(t2) + " on " + show(sm);

  // The unit is an isomorphism.
  Ctx dsm = desusp(sm);
  Sub round_ctx = compose(em.inv, em.fwd);
  Sub round_img = compose(em.fwd, em.inv);
  r.eta_iso_holds = sub_defeq(Theory::Mcatt, nm, round_ctx, identity(nm)) &&
                    sub_defeq(Theory::Mcatt, dsm, round_img, identity(dsm));
  if (!r.eta_iso_holds && r.counterexample.empty())
    r.counterexample = "eta round trips are " + show(round_ctx) + " and " + show(round_img);

  return r;
}

bool counit_natural(const Ctx& dom, const Sub& s, const Ctx& tgt) {
  Ctx dd = normalize_ctx(Theory::Mcatt, desusp(dom));
  Sub ds = normalize(Theory::Mcatt, desusp(s), dd);
  Sub lifted = rsusp(ds, normalize_ctx(Theory::Mcatt, desusp(tgt)), dd);
  Sub lhs = compose(s, red_sub(dom));
  Sub rhs = compose(red_sub(tgt), lifted);
  return sub_defeq(Theory::Catt, rsusp(dd), lhs, rhs);
}

bool eta_natural(const Ctx& dom, const Sub& s, const Ctx& tgt) {
  Ctx nd = normalize_ctx(Theory::Mcatt, dom);
  Ctx nt = normalize_ctx(Theory::Mcatt, tgt);
  Sub ns = normalize(Theory::Mcatt, s, nd);
  Sub lhs = compose(eta(nt).fwd, ns);
  Sub lifted = desusp(rsusp(ns, nt, nd));
  Sub rhs = compose(lifted, eta(nd).fwd);
  return sub_defeq(Theory::Mcatt, nd, lhs, rhs);
}

}  // namespace mcatt
