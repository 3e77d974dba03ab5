#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "mcatt/ps.hpp"
#include "mcatt/syntax.hpp"

namespace mcatt::oracle {

enum class Verdict { Found, NotFound, OutOfFuel };
const char* verdict_name(Verdict v);

// Judgment forms understood by the searcher.
struct JCtx {
  Theory th;
  Ctx ctx;
};
struct JTy {
  Theory th;
  Ctx ctx;
  TyPtr ty;
};
struct JTm {
  Theory th;
  Ctx ctx;
  TmPtr tm;
  TyPtr ty;
};
struct JSub {
  Theory th;
  Ctx dom;
  Sub sub;
  Ctx tgt;
};
struct JPs {
  Ctx ctx;
};
struct JOp {
  Ctx ctx;
  TyPtr ty;
};
struct JEq {
  Ctx ctx;
  TyPtr ty;
};
using Judgment = std::variant<JCtx, JTy, JTm, JSub, JPs, JOp, JEq>;

// Goal-directed search over the inference rules, exploring candidate
// premises exhaustively. Fuel counts rule applications; NotFound is
// reported only when the space below the bound was explored completely,
// otherwise the verdict is OutOfFuel. Deliberately written against its
// own helper routines so that it does not share code with the checker.
Verdict derivation_search(const Judgment& j, long fuel);

// All ps-contexts with at most max_vars binders, canonically named
// v0, v1, ... in telescope order, produced by forward closure of the
// ps rules; deterministic order.
std::vector<Ctx> enumerate_ps(int max_vars);

// Boundary from the globular reading of a ps-context: cells below
// dimension i plus the i-cells that are never a target (source side)
// or never a source (target side).
Ctx boundary_globular(const Ctx& ctx, int i, Side side);

// All well-formed Glob telescopes over canonical names with at most
// max_binders binders: every type is * or a Hom between two previous
// variables of equal declared type.
std::vector<Ctx> enumerate_glob_ctxs(int max_binders);

// Telescopes made of a point binder followed by pairs (y : T, f : x -> y)
// where x is any previous variable of type T. Contains every ps-context
// of that size along with invalid gluings.
std::vector<Ctx> enumerate_paired_ctxs(int max_binders);

// Canonical composite of a ps-context: the variable itself on the point,
// otherwise the operation running from the composite of the source
// boundary to the composite of the target boundary, applied to the
// identity. Returns the term and its type.
std::pair<TmPtr, TyPtr> full_composite(const Ctx& ps_ctx);
// The coherence whose endpoints are both the full composite.
std::pair<TmPtr, TyPtr> composite_coherence(const Ctx& ps_ctx);

// --- random generation of accepted judgments ---

struct PoolEntry {
  TmPtr tm;
  TyPtr ty;
  int depth = 0;  // coherence nesting depth
};

struct GenCtx {
  Ctx ctx;
  std::vector<PoolEntry> pool;
};

// Grows random accepted Catt data: contexts whose binder types run
// between pool terms, coherence instances over small ps-contexts, and
// substitutions whose domain grows a fresh binder whenever the pool has
// no term of the required type.
class Gen {
public:
  explicit Gen(uint64_t seed);

  GenCtx sample_ctx(int binders, int max_depth);
  TyPtr sample_ty(GenCtx& g, int max_depth);
  Sub sample_sub(GenCtx& dom, const Ctx& tgt);
  // Desuspends and inserts a few unit binders at random positions.
  Ctx sample_mcatt_ctx(const Ctx& catt_ctx);

  std::mt19937_64& rng() { return rng_; }

private:
  void enrich(GenCtx& g, int max_depth);
  const PoolEntry* find_pool(const GenCtx& g, const TyPtr& want);
  int pick(int n);

  std::mt19937_64 rng_;
  std::vector<Ctx> ps_library_;
  uint64_t fresh_ = 0;
};

}  // namespace mcatt::oracle
