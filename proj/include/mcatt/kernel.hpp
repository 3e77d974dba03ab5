#pragma once

#include <optional>

#include "mcatt/error.hpp"
#include "mcatt/ps.hpp"
#include "mcatt/subst.hpp"
#include "mcatt/syntax.hpp"

namespace mcatt {

struct ErrorInfo {
  ErrorCode code;
  std::string rule;
  std::string detail;
  Span span;

  static ErrorInfo from(const CheckError& e) { return {e.code, e.rule, e.detail, e.span}; }
};

// Outcome of a kernel query. `judgment` is the rendered judgment that was
// examined; `inferred` is set by infer_tm on acceptance.
struct CheckReport {
  bool accepted = false;
  Theory theory = Theory::Catt;
  std::string judgment;
  TyPtr inferred;
  std::optional<ErrorInfo> error;
};

// Throwing checkers. Preconditions follow the judgment presuppositions:
// require_ty assumes its context would pass require_ctx, infer assumes
// both, require_sub assumes source and target contexts are accepted.
void require_ctx(Theory th, const Ctx& ctx);
void require_ty(Theory th, const Ctx& ctx, const TyPtr& a);
TyPtr infer(Theory th, const Ctx& ctx, const TmPtr& t);
void require_tm(Theory th, const Ctx& ctx, const TmPtr& t, const TyPtr& a);
void require_sub(Theory th, const Ctx& dom, const Sub& s, const Ctx& tgt);

// Side conditions on the index type of a coherence constructor; both live
// in Catt syntax. An operation needs a Hom type whose source covers the
// source boundary and whose target covers the target boundary; a
// coherence needs both endpoints to cover the whole ps-context.
void require_op_side(const Ctx& ps, const TyPtr& a);
void require_eq_side(const Ctx& ps, const TyPtr& a);

// Report-producing wrappers around the checkers above.
CheckReport check_ctx(Theory th, const Ctx& ctx);
CheckReport check_ty(Theory th, const Ctx& ctx, const TyPtr& a);
CheckReport infer_tm(Theory th, const Ctx& ctx, const TmPtr& t);
CheckReport check_sub(Theory th, const Ctx& dom, const Sub& s, const Ctx& tgt);
CheckReport check_op_side(const Ctx& ps, const TyPtr& a);
CheckReport check_eq_side(const Ctx& ps, const TyPtr& a);

// Unit-type normal form: every term of type 1 becomes (), the Obj
// shorthand expands to Hom(1,(),()). Identity in Glob and Catt. The
// context supplies the types of free variables.
TyPtr normalize(Theory th, const TyPtr& a, const Ctx& ctx);
TmPtr normalize(Theory th, const TmPtr& t, const Ctx& ctx);
Sub normalize(Theory th, const Sub& s, const Ctx& ctx);
Ctx normalize_ctx(Theory th, const Ctx& ctx);

// Definitional equality: normalize-then-compare, with coherence indices
// compared up to canonical renaming of their binders.
bool ty_defeq(Theory th, const Ctx& ctx, const TyPtr& a, const TyPtr& b);
bool tm_defeq(Theory th, const Ctx& ctx, const TmPtr& t, const TmPtr& u);
bool sub_defeq(Theory th, const Ctx& ctx, const Sub& s, const Sub& r);

}  // namespace mcatt
