#include "mcatt/kernel.hpp"

#include <set>

#include "mcatt/translate.hpp"

namespace mcatt {

TyPtr normalize(Theory th, const TyPtr& a, const Ctx& ctx) {
  if (!theory_has_unit(th)) return a;
  if (is_obj(*a)) return ty_hom(ty_unit(), tm_unit(), tm_unit());
  if (const auto* h = as_hom(*a))
    return ty_hom(normalize(th, h->base, ctx), normalize(th, h->src, ctx),
                  normalize(th, h->tgt, ctx));
  return a;
}

TmPtr normalize(Theory th, const TmPtr& t, const Ctx& ctx) {
  if (!theory_has_unit(th)) return t;
  if (const auto* v = as_var(*t)) {
    auto a = ctx.lookup(v->v);
    if (!a)
      throw CheckError(ErrorCode::UnboundVariable, "var",
                       "variable " + v->v.name + " not in context");
    return is_unit(**a) ? tm_unit() : t;
  }
  if (const auto* c = as_coh(*t)) {
    Sub args;
    size_t i = 0;
    for (const auto& [x, u] : c->args.assigns) {
      // The unit components of a monoidal constructor sit at the dimension
      // 0 binders of its Catt index.
      bool unit_slot = c->theory == Theory::Mcatt && i < c->ps.bindings.size() &&
                       is_obj(*c->ps.bindings[i].second);
      args.push(x, unit_slot ? tm_unit() : normalize(th, u, ctx));
      ++i;
    }
    return tm_coh(c->kind, c->ps, c->ty, std::move(args), c->theory);
  }
  return t;
}

Sub normalize(Theory th, const Sub& s, const Ctx& ctx) {
  if (!theory_has_unit(th)) return s;
  Sub out;
  for (const auto& [x, t] : s.assigns) out.push(x, normalize(th, t, ctx));
  return out;
}

Ctx normalize_ctx(Theory th, const Ctx& ctx) {
  if (!theory_has_unit(th)) return ctx;
  Ctx out;
  for (const auto& [x, a] : ctx.bindings) out.push(x, normalize(th, a, ctx));
  return out;
}

bool ty_defeq(Theory th, const Ctx& ctx, const TyPtr& a, const TyPtr& b) {
  if (theory_has_unit(th))
    return equal(canon(normalize(th, a, ctx)), canon(normalize(th, b, ctx)));
  return equal(canon(a), canon(b));
}

bool tm_defeq(Theory th, const Ctx& ctx, const TmPtr& t, const TmPtr& u) {
  if (theory_has_unit(th))
    return equal(canon(normalize(th, t, ctx)), canon(normalize(th, u, ctx)));
  return equal(canon(t), canon(u));
}

bool sub_defeq(Theory th, const Ctx& ctx, const Sub& s, const Sub& r) {
  if (s.size() != r.size()) return false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s.assigns[i].first != r.assigns[i].first) return false;
    if (!tm_defeq(th, ctx, s.assigns[i].second, r.assigns[i].second)) return false;
  }
  return true;
}

void require_ty(Theory th, const Ctx& ctx, const TyPtr& a) {
  if (is_obj(*a)) return;  // in the unit theories this is the Hom(1,(),()) shorthand
  if (is_unit(*a)) {
    if (!theory_has_unit(th))
      throw CheckError(ErrorCode::TheoryViolation, "unit-intro",
                       std::string("the unit type is not part of ") + theory_name(th));
    return;
  }
  const auto* h = as_hom(*a);
  require_ty(th, ctx, h->base);
  TyPtr ts = infer(th, ctx, h->src);
  if (!ty_defeq(th, ctx, ts, h->base))
    throw CheckError(ErrorCode::TypeMismatch, "hom-intro",
                     "source " + show(h->src) + " has type " + show(ts) + ", expected " +
                         show(h->base));
  TyPtr tt = infer(th, ctx, h->tgt);
  if (!ty_defeq(th, ctx, tt, h->base))
    throw CheckError(ErrorCode::TypeMismatch, "hom-intro",
                     "target " + show(h->tgt) + " has type " + show(tt) + ", expected " +
                         show(h->base));
}

TyPtr infer(Theory th, const Ctx& ctx, const TmPtr& t) {
  if (const auto* v = as_var(*t)) {
    if (auto a = ctx.lookup(v->v)) return *a;
    throw CheckError(ErrorCode::UnboundVariable, "var",
                     "variable " + v->v.name + " not in context");
  }
  if (is_unit_tm(*t)) {
    if (!theory_has_unit(th))
      throw CheckError(ErrorCode::TheoryViolation, "unit-elem",
                       std::string("the unit element is not part of ") + theory_name(th));
    return ty_unit();
  }

  const auto* c = as_coh(*t);
  std::string rule = c->kind == CohKind::Op ? "op" : "coh";
  if (!theory_has_coh(th))
    throw CheckError(ErrorCode::TheoryViolation, rule,
                     std::string("coherence constructors are not part of ") + theory_name(th));
  if (c->theory != th)
    throw CheckError(ErrorCode::TheoryViolation, rule,
                     std::string(theory_name(c->theory)) + " constructor used under " +
                         theory_name(th));

  check_ps(c->ps);
  if (c->kind == CohKind::Op)
    require_op_side(c->ps, c->ty);
  else
    require_eq_side(c->ps, c->ty);

  Ctx target = th == Theory::Mcatt ? desusp(c->ps) : c->ps;
  TyPtr ret = th == Theory::Mcatt ? desusp(c->ty) : c->ty;
  try {
    require_sub(th, ctx, c->args, target);
  } catch (const CheckError& e) {
    if (e.code == ErrorCode::TypeMismatch)
      throw CheckError(ErrorCode::SubstMismatch, e.rule, e.detail, e.span);
    throw;
  }
  TyPtr out = mcatt::apply(ret, c->args);
  return th == Theory::Mcatt ? normalize(th, out, ctx) : out;
}

void require_tm(Theory th, const Ctx& ctx, const TmPtr& t, const TyPtr& a) {
  TyPtr got = infer(th, ctx, t);
  if (!ty_defeq(th, ctx, got, a))
    throw CheckError(ErrorCode::TypeMismatch, "conv",
                     show(t) + " has type " + show(got) + ", expected " + show(a));
}

void require_sub(Theory th, const Ctx& dom, const Sub& s, const Ctx& tgt) {
  if (s.size() != tgt.size())
    throw CheckError(ErrorCode::ArityMismatch, "se",
                     "substitution has " + std::to_string(s.size()) +
                         " components, target expects " + std::to_string(tgt.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    const auto& [x, t] = s.assigns[i];
    const auto& [y, a] = tgt.bindings[i];
    if (x != y)
      throw CheckError(ErrorCode::NameMismatch, "se",
                       "component " + std::to_string(i + 1) + " is named " + x.name +
                           ", target binder is " + y.name);
    TyPtr expect = mcatt::apply(a, s.prefix(i));
    TyPtr got = infer(th, dom, t);
    if (!ty_defeq(th, dom, got, expect))
      throw CheckError(ErrorCode::TypeMismatch, "se",
                       "component " + x.name + " := " + show(t) + " has type " + show(got) +
                           ", expected " + show(expect));
  }
}

void require_ctx(Theory th, const Ctx& ctx) {
  std::set<Var> seen;
  for (size_t i = 0; i < ctx.bindings.size(); ++i) {
    const auto& [x, a] = ctx.bindings[i];
    if (seen.count(x))
      throw CheckError(ErrorCode::DuplicateVar, "ce", "variable " + x.name + " bound twice");
    try {
      require_ty(th, ctx.prefix(i), a);
    } catch (const CheckError& e) {
      if (e.code == ErrorCode::UnboundVariable)
        throw CheckError(ErrorCode::ScopeError, "ce", "binder " + x.name + ": " + e.detail,
                         e.span);
      if (e.code == ErrorCode::TypeMismatch)
        throw CheckError(ErrorCode::TypeError, "ce", "binder " + x.name + ": " + e.detail,
                         e.span);
      throw;
    }
    seen.insert(x);
  }
}

namespace {

std::set<Var> joint_vars(const TmPtr& t, const TyPtr& b) {
  std::set<Var> out = var_set(t);
  for (const Var& v : var_set(b)) out.insert(v);
  return out;
}

std::string show_vars(const std::set<Var>& vs) {
  std::string out = "{";
  for (const Var& v : vs) {
    if (out.size() > 1) out += ", ";
    out += v.name;
  }
  return out + "}";
}

}  // namespace

void require_op_side(const Ctx& ps, const TyPtr& a) {
  const auto* h = as_hom(*a);
  if (!h)
    throw CheckError(ErrorCode::SideConditionViolation, "op",
                     "the type of an operation must be a Hom type, found " + show(a));
  Ctx sctx = src(ps);
  Ctx tctx = tgt(ps);
  try {
    require_tm(Theory::Catt, sctx, h->src, h->base);
  } catch (const CheckError& e) {
    throw CheckError(ErrorCode::SideConditionViolation, "op", "source side: " + e.detail);
  }
  try {
    require_tm(Theory::Catt, tctx, h->tgt, h->base);
  } catch (const CheckError& e) {
    throw CheckError(ErrorCode::SideConditionViolation, "op", "target side: " + e.detail);
  }
  if (joint_vars(h->src, h->base) != var_set(sctx))
    throw CheckError(ErrorCode::SideConditionViolation, "op",
                     "source uses " + show_vars(joint_vars(h->src, h->base)) +
                         " but the source boundary is " + show_vars(var_set(sctx)));
  if (joint_vars(h->tgt, h->base) != var_set(tctx))
    throw CheckError(ErrorCode::SideConditionViolation, "op",
                     "target uses " + show_vars(joint_vars(h->tgt, h->base)) +
                         " but the target boundary is " + show_vars(var_set(tctx)));
}

void require_eq_side(const Ctx& ps, const TyPtr& a) {
  const auto* h = as_hom(*a);
  if (!h)
    throw CheckError(ErrorCode::SideConditionViolation, "coh",
                     "the type of a coherence must be a Hom type, found " + show(a));
  try {
    require_tm(Theory::Catt, ps, h->src, h->base);
    require_tm(Theory::Catt, ps, h->tgt, h->base);
  } catch (const CheckError& e) {
    throw CheckError(ErrorCode::SideConditionViolation, "coh", e.detail);
  }
  if (joint_vars(h->src, h->base) != var_set(ps))
    throw CheckError(ErrorCode::SideConditionViolation, "coh",
                     "source uses " + show_vars(joint_vars(h->src, h->base)) +
                         " but must cover " + show_vars(var_set(ps)));
  if (joint_vars(h->tgt, h->base) != var_set(ps))
    throw CheckError(ErrorCode::SideConditionViolation, "coh",
                     "target uses " + show_vars(joint_vars(h->tgt, h->base)) +
                         " but must cover " + show_vars(var_set(ps)));
}

namespace {

template <class F>
CheckReport run_check(Theory th, std::string judgment, F body) {
  CheckReport r;
  r.theory = th;
  r.judgment = std::move(judgment);
  try {
    r.inferred = body();
    r.accepted = true;
  } catch (const CheckError& e) {
    r.accepted = false;
    r.error = ErrorInfo::from(e);
  }
  return r;
}

}  // namespace

CheckReport check_ctx(Theory th, const Ctx& ctx) {
  return run_check(th, show(ctx) + " |-", [&]() -> TyPtr {
    require_ctx(th, ctx);
    return nullptr;
  });
}

CheckReport check_ty(Theory th, const Ctx& ctx, const TyPtr& a) {
  return run_check(th, show(ctx) + " |- " + show(a), [&]() -> TyPtr {
    require_ty(th, ctx, a);
    return nullptr;
  });
}

CheckReport infer_tm(Theory th, const Ctx& ctx, const TmPtr& t) {
  CheckReport r = run_check(th, "", [&]() -> TyPtr {
    TyPtr a = infer(th, ctx, t);
    return theory_has_unit(th) ? normalize(th, a, ctx) : a;
  });
  r.judgment = show(ctx) + " |- " + show(t);
  if (r.accepted) r.judgment += " : " + show(r.inferred);
  return r;
}

CheckReport check_sub(Theory th, const Ctx& dom, const Sub& s, const Ctx& tgt) {
  return run_check(th, show(dom) + " |- " + show(s) + " : " + show(tgt), [&]() -> TyPtr {
    require_sub(th, dom, s, tgt);
    return nullptr;
  });
}

CheckReport check_op_side(const Ctx& ps, const TyPtr& a) {
  return run_check(Theory::Catt, show(ps) + " |-op " + show(a), [&]() -> TyPtr {
    require_op_side(ps, a);
    return nullptr;
  });
}

CheckReport check_eq_side(const Ctx& ps, const TyPtr& a) {
  return run_check(Theory::Catt, show(ps) + " |-eq " + show(a), [&]() -> TyPtr {
    require_eq_side(ps, a);
    return nullptr;
  });
}

}  // namespace mcatt
