#include "mcatt/ps.hpp"

#include "mcatt/error.hpp"

namespace mcatt {

namespace {

[[noreturn]] void not_ps(const std::string& rule, size_t binder, const std::string& what) {
  throw CheckError(ErrorCode::NotPs, rule,
                   "binder " + std::to_string(binder) + ": " + what);
}

// The variable the dangling judgment points at, together with its type.
struct Dangling {
  Var x;
  TyPtr ty;
};

// One PSD step: from f : Hom(A, x, y) the judgment moves down to y : A.
Dangling step_down(const Dangling& d, size_t binder) {
  const auto* h = as_hom(*d.ty);
  if (!h) not_ps("psd", binder, "cannot lower the marker below dimension 0");
  const auto* y = as_var(*h->tgt);
  if (!y) not_ps("psd", binder, "marker type has a non-variable target");
  return Dangling{y->v, h->base};
}

}  // namespace

PsWitness check_ps(const Ctx& ctx) {
  const auto& bs = ctx.bindings;
  if (bs.empty()) not_ps("pss", 0, "empty context");
  if (!well_scoped(ctx)) not_ps("pss", 0, "context is not well-scoped");
  if (!is_obj(*bs[0].second))
    not_ps("pss", 1, "first binder must have type *, found " + show(bs[0].second));

  PsWitness w;
  w.ctx = ctx;
  w.steps.push_back({PsRule::Pss, {}, {}});
  Dangling d{bs[0].first, bs[0].second};

  size_t i = 1;
  while (i < bs.size()) {
    if (i + 1 >= bs.size())
      not_ps("pse", i + 1,
             "expected a filler binder of type " + bs[i].first.name + " after it");
    const auto& [y, b] = bs[i];
    const auto& [f, c] = bs[i + 1];
    while (dim(d.ty) > dim(b)) {
      d = step_down(d, i + 1);
      w.steps.push_back({PsRule::Psd, {}, {}});
    }
    if (!equal(d.ty, b))
      not_ps("pse", i + 1,
             "expected the marker type " + show(d.ty) + ", found " + show(b));
    TyPtr expect = ty_hom(b, tm_var(d.x), tm_var(y));
    if (!equal(c, expect))
      not_ps("pse", i + 2, "expected type " + show(expect) + ", found " + show(c));
    w.steps.push_back({PsRule::Pse, f, y});
    d = Dangling{f, c};
    i += 2;
  }

  while (dim(d.ty) > 0) {
    d = step_down(d, bs.size());
    w.steps.push_back({PsRule::Psd, {}, {}});
  }
  if (!is_obj(*d.ty))
    not_ps("ps", bs.size(), "marker did not come back to type *");
  w.steps.push_back({PsRule::Ps, {}, {}});
  return w;
}

bool is_ps(const Ctx& ctx) {
  try {
    check_ps(ctx);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

Ctx boundary(const Ctx& ctx, int i, Side side) {
  check_ps(ctx);
  if (i < 0)
    throw CheckError(ErrorCode::BoundaryUndefined, "boundary",
                     "no boundary at negative dimension");
  const auto& bs = ctx.bindings;
  Ctx out;
  out.push(bs[0].first, bs[0].second);
  for (size_t k = 1; k + 1 < bs.size(); k += 2) {
    const auto& [y, b] = bs[k];
    const auto& [f, c] = bs[k + 1];
    int db = dim(b);
    if (side == Side::Src) {
      if (db >= i) continue;
      out.push(y, b);
      out.push(f, c);
    } else {
      if (db > i) continue;
      if (db == i) {
        out.bindings.pop_back();
        out.push(y, b);
      } else {
        out.push(y, b);
        out.push(f, c);
      }
    }
  }
  return out;
}

Ctx src(const Ctx& ctx) {
  int d = dim(ctx);
  if (d <= 0)
    throw CheckError(ErrorCode::BoundaryUndefined, "boundary",
                     "the point context has no source");
  return boundary(ctx, d - 1, Side::Src);
}

Ctx tgt(const Ctx& ctx) {
  int d = dim(ctx);
  if (d <= 0)
    throw CheckError(ErrorCode::BoundaryUndefined, "boundary",
                     "the point context has no target");
  return boundary(ctx, d - 1, Side::Tgt);
}

std::vector<Var> locally_maximal(const Ctx& ctx) {
  std::set<Var> used;
  for (const auto& [x, a] : ctx.bindings)
    for (const Var& v : var_set(a)) used.insert(v);
  std::vector<Var> out;
  for (const auto& [x, a] : ctx.bindings)
    if (!used.count(x)) out.push_back(x);
  return out;
}

}  // namespace mcatt
