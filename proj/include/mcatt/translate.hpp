#pragma once

#include "mcatt/kernel.hpp"
#include "mcatt/syntax.hpp"

namespace mcatt {

// Desuspension, from Catt syntax to Mcatt syntax. Structural: Obj becomes
// the unit type, binders are kept, cohop/coh constructors become mop/mcoh
// with the index pair copied verbatim. Total on raw Catt syntax; carries
// accepted judgments to accepted judgments one dimension down.
TyPtr desusp(const TyPtr& a);
TmPtr desusp(const TmPtr& t);
Sub desusp(const Sub& s);
Ctx desusp(const Ctx& ctx);

// Reduced suspension, from Mcatt back to Catt. Defined only on normalized
// kernel-accepted input; a non-() term of unit type raises NotNormalized.
// The empty context becomes the point context on the reserved base
// variable, unit binders disappear, and mop/mcoh constructors become
// cohop/coh with the arguments precomposed with the counit of their index.
// Terms and substitutions need the ambient context for variable types;
// substitutions also need their target context to locate unit components.
TyPtr rsusp(const TyPtr& a, const Ctx& ambient);
TmPtr rsusp(const TmPtr& t, const Ctx& ambient);
Sub rsusp(const Sub& s, const Ctx& target, const Ctx& ambient);
Ctx rsusp(const Ctx& ctx);

// Counit at a Catt context: the substitution from the reduced suspension
// of the desuspension back to the context. Dimension 0 binders map to the
// reserved base variable, all others to themselves.
Sub red_sub(const Ctx& ctx);

// Unit at an Mcatt context: the isomorphism onto the desuspended reduced
// suspension, returned together with its inverse.
struct EtaPair {
  Sub fwd;  // ctx |- fwd : desusp(rsusp(ctx))
  Sub inv;  // desusp(rsusp(ctx)) |- inv : ctx
};
EtaPair eta(const Ctx& ctx);

enum class Direction { Desusp, Rsusp };

// Translates a judgment and re-checks the image in the target theory.
CheckReport translate_ctx_correct(Direction dir, const Ctx& ctx);
CheckReport translate_ty_correct(Direction dir, const Ctx& ctx, const TyPtr& a);
CheckReport translate_tm_correct(Direction dir, const Ctx& ctx, const TmPtr& t);
CheckReport translate_sub_correct(Direction dir, const Ctx& dom, const Sub& s, const Ctx& tgt);

// Mechanical verification of the adjunction identities on concrete
// contexts: the two triangle laws and the unit being an isomorphism.
struct AdjReport {
  Ctx catt_ctx;
  Ctx mcatt_ctx;
  bool triangle1_holds = false;  // desusp(counit) after eta is the identity
  bool triangle2_holds = false;  // counit after rsusp(eta) is the identity
  bool eta_iso_holds = false;    // both eta round trips are identities
  std::string counterexample;    // first failing equation, empty when fine

  bool all() const { return triangle1_holds && triangle2_holds && eta_iso_holds; }
};

// catt_ctx must be Catt-accepted, mcatt_ctx Mcatt-accepted.
AdjReport verify_adjunction(const Ctx& catt_ctx, const Ctx& mcatt_ctx);

// Naturality squares, checked syntactically on the Catt side and up to
// definitional equality on the Mcatt side. The substitution arguments are
// dom |- s : tgt in the respective theory.
bool counit_natural(const Ctx& dom, const Sub& s, const Ctx& tgt);  // Catt data
bool eta_natural(const Ctx& dom, const Sub& s, const Ctx& tgt);     // Mcatt data

}  // namespace mcatt
