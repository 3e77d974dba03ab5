#pragma once

#include "mcatt/syntax.hpp"

namespace mcatt {

// Rules of the ps-context judgment. A derivation starts with PSS on a
// single object binder, extends with PSE (which appends a binder pair),
// walks down with PSD, and closes with PS once the marked variable is
// back at dimension 0.
enum class PsRule { Pss, Pse, Psd, Ps };

struct PsStep {
  PsRule rule;
  // Binder pair appended by PSE; unset for the other rules.
  Var filler;  // the new top cell
  Var target;  // its codomain variable

  bool operator==(const PsStep&) const = default;
};

// Certificate returned by check_ps: replaying the steps from the first
// binder reconstructs ctx and ends with rule Ps.
struct PsWitness {
  Ctx ctx;
  std::vector<PsStep> steps;
};

// Recognizes ps-contexts deterministically: scan the telescope left to
// right, inserting PSD steps greedily before each PSE. Throws CheckError
// with code NotPs (offending binder position in the detail) otherwise.
PsWitness check_ps(const Ctx& ctx);
bool is_ps(const Ctx& ctx);

enum class Side { Src, Tgt };

// i-boundary of a ps-context. The negative side drops every binder pair
// whose base type has dimension >= i; the positive side additionally
// replaces the top cell of each pair at dimension exactly i. For
// i >= dim(ctx) this returns ctx itself. Requires i >= 0 and a ps-context.
Ctx boundary(const Ctx& ctx, int i, Side side);

// boundary at i = dim(ctx) - 1; BoundaryUndefined on the point context.
Ctx src(const Ctx& ctx);
Ctx tgt(const Ctx& ctx);

// Variables not occurring as the source or target of any later binder's
// Hom type, in telescope order. Used by the elaborator's application form.
std::vector<Var> locally_maximal(const Ctx& ctx);

}  // namespace mcatt
