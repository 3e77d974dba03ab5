#pragma once

#include "mcatt/syntax.hpp"

namespace mcatt {

// Applies a substitution. Variable lookup takes the rightmost assignment;
// a free variable outside the domain raises UnboundVariable. Coherence
// arguments are substituted componentwise, the index pair is untouched.
TyPtr apply(const TyPtr& a, const Sub& s);
TmPtr apply(const TmPtr& t, const Sub& s);

// compose(g, d) maps x := t through d, so apply(e, compose(g, d)) equals
// apply(apply(e, g), d).
Sub compose(const Sub& g, const Sub& d);

// Identity substitution x := x for every binder of ctx.
Sub identity(const Ctx& ctx);

}  // namespace mcatt
