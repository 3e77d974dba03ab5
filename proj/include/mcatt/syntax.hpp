#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace mcatt {

// The four theories handled by the kernel. Glob and Catt build types over
// Obj; GlobUnit and Mcatt add the unit type with its definitional equality.
enum class Theory { Glob, Catt, GlobUnit, Mcatt };

const char* theory_name(Theory th);
bool theory_has_unit(Theory th);
bool theory_has_coh(Theory th);

enum class CohKind { Op, Eq };

struct Var {
  std::string name;
  // The distinguished base variable introduced by the reduced suspension.
  // User sources can never declare it: the surface grammar has no token
  // for it, so reserved variables only arise from translation output.
  bool reserved = false;

  static Var base() { return Var{"<>", true}; }

  auto operator<=>(const Var&) const = default;
};

struct Ty;
struct Tm;
using TyPtr = std::shared_ptr<const Ty>;
using TmPtr = std::shared_ptr<const Tm>;

// Telescope of distinct variables with types over the earlier prefix.
struct Ctx {
  std::vector<std::pair<Var, TyPtr>> bindings;

  size_t size() const { return bindings.size(); }
  bool empty() const { return bindings.empty(); }
  std::optional<TyPtr> lookup(const Var& x) const;
  bool binds(const Var& x) const { return lookup(x).has_value(); }
  Ctx& push(Var x, TyPtr a);
  Ctx prefix(size_t n) const;  // first n bindings

  bool operator==(const Ctx&) const;
};

// Substitution as an ordered list of assignments. The domain mirrors the
// target telescope positionally; lookup takes the rightmost match.
struct Sub {
  std::vector<std::pair<Var, TmPtr>> assigns;

  size_t size() const { return assigns.size(); }
  bool empty() const { return assigns.empty(); }
  std::optional<TmPtr> lookup(const Var& x) const;
  Sub& push(Var x, TmPtr t);
  Sub prefix(size_t n) const;

  bool operator==(const Sub&) const;
};

struct ObjTy {};
struct UnitTy {};
struct HomTy {
  TyPtr base;
  TmPtr src;
  TmPtr tgt;
};

struct Ty {
  std::variant<ObjTy, UnitTy, HomTy> node;
};

struct VarTm {
  Var v;
};
struct UnitTm {};
// Coherence constructor cohop/coh (Catt) or mop/mcoh (Mcatt). The index
// pair (ps, ty) always lives in Catt syntax; `theory` records which
// constructor family the node belongs to.
struct CohTm {
  CohKind kind;
  Ctx ps;
  TyPtr ty;
  Sub args;
  Theory theory;
};

struct Tm {
  std::variant<VarTm, UnitTm, CohTm> node;
};

// Constructors. Obj and Unit are shared singletons.
TyPtr ty_obj();
TyPtr ty_unit();
TyPtr ty_hom(TyPtr base, TmPtr src, TmPtr tgt);
TmPtr tm_var(Var v);
TmPtr tm_var(const std::string& name);
TmPtr tm_unit();
TmPtr tm_coh(CohKind kind, Ctx ps, TyPtr ty, Sub args, Theory theory);

inline bool is_obj(const Ty& a) { return std::holds_alternative<ObjTy>(a.node); }
inline bool is_unit(const Ty& a) { return std::holds_alternative<UnitTy>(a.node); }
inline bool is_hom(const Ty& a) { return std::holds_alternative<HomTy>(a.node); }
inline const HomTy* as_hom(const Ty& a) { return std::get_if<HomTy>(&a.node); }
inline bool is_var(const Tm& t) { return std::holds_alternative<VarTm>(t.node); }
inline bool is_unit_tm(const Tm& t) { return std::holds_alternative<UnitTm>(t.node); }
inline const VarTm* as_var(const Tm& t) { return std::get_if<VarTm>(&t.node); }
inline const CohTm* as_coh(const Tm& t) { return std::get_if<CohTm>(&t.node); }

// Deep structural equality.
bool operator==(const Ty& a, const Ty& b);
bool operator==(const Tm& t, const Tm& u);
bool equal(const TyPtr& a, const TyPtr& b);
bool equal(const TmPtr& t, const TmPtr& u);

// dim(Unit) = -2, dim(Obj) = 0, dim(Hom A _ _) = dim(A) + 1.
// The Obj shorthand of the unit theories normalizes to Hom(1,(),()) and so
// sits at dimension -1 once expanded.
int dim(const Ty& a);
int dim(const TyPtr& a);
// Max binder type dimension; -1 for the empty context.
int dim(const Ctx& ctx);

std::set<Var> var_set(const TyPtr& a);
std::set<Var> var_set(const TmPtr& t);
std::set<Var> var_set(const Sub& s);
std::set<Var> var_set(const Ctx& ctx);

// Every binder type mentions only earlier binders and names are distinct.
bool well_scoped(const Ctx& ctx);

// Variable renaming. Substitution in Coh nodes renames argument terms only:
// the index pair is a closed scope.
using Renaming = std::map<Var, Var>;
TyPtr rename(const TyPtr& a, const Renaming& r);
TmPtr rename(const TmPtr& t, const Renaming& r);
Sub rename_assigns(const Sub& s, const Renaming& r);  // right-hand sides only
Ctx rename(const Ctx& ctx, const Renaming& r);        // binders and types

// Canonical form for comparison up to bound-variable names: every Coh index
// telescope is renamed to v0, v1, ... in order (recursively). Argument
// domains are renamed to match; argument terms keep their free variables.
Ctx canon_ctx(const Ctx& ctx);  // renames the binders of ctx itself
TyPtr canon(const TyPtr& a);
TmPtr canon(const TmPtr& t);

// Rendering in surface style: Obj as *, Unit as 1, Hom as "t -> u"
// (the base is recoverable by inference), coherences in a structural
// debug form "cohop{tele : ty}[t1, ..., tn]".
std::string show(const TyPtr& a);
std::string show(const TmPtr& t);
std::string show(const Ctx& ctx);
std::string show(const Sub& s);

}  // namespace mcatt
