#include "mcatt/subst.hpp"

#include "mcatt/error.hpp"

namespace mcatt {

TyPtr apply(const TyPtr& a, const Sub& s) {
  if (const auto* h = as_hom(*a))
    return ty_hom(apply(h->base, s), apply(h->src, s), apply(h->tgt, s));
  return a;
}

TmPtr apply(const TmPtr& t, const Sub& s) {
  if (const auto* v = as_var(*t)) {
    if (auto u = s.lookup(v->v)) return *u;
    throw CheckError(ErrorCode::UnboundVariable, "subst",
                     "variable " + v->v.name + " not in substitution domain");
  }
  if (const auto* c = as_coh(*t)) {
    Sub args;
    for (const auto& [x, u] : c->args.assigns) args.push(x, apply(u, s));
    return tm_coh(c->kind, c->ps, c->ty, std::move(args), c->theory);
  }
  return t;
}

Sub compose(const Sub& g, const Sub& d) {
  Sub out;
  for (const auto& [x, t] : g.assigns) out.push(x, apply(t, d));
  return out;
}

Sub identity(const Ctx& ctx) {
  Sub out;
  for (const auto& [x, a] : ctx.bindings) out.push(x, tm_var(x));
  return out;
}

}  // namespace mcatt
