#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>

#include "mcatt/error.hpp"
#include "mcatt/syntax.hpp"

// Shared fixtures: the composable pair, the 2-disc and the right whisker
// telescope, plus shorthand constructors over Obj.
namespace fix {

using namespace mcatt;

inline TmPtr v(const std::string& name) { return tm_var(name); }

inline TyPtr arrow(const TmPtr& s, const TmPtr& t) { return ty_hom(ty_obj(), s, t); }
inline TyPtr arrow(const std::string& s, const std::string& t) { return arrow(v(s), v(t)); }

inline Ctx ctx_of(std::initializer_list<std::pair<std::string, TyPtr>> bs) {
  Ctx out;
  for (const auto& [x, a] : bs) out.push(Var{x}, a);
  return out;
}

inline Sub sub_of(std::initializer_list<std::pair<std::string, TmPtr>> as) {
  Sub out;
  for (const auto& [x, t] : as) out.push(Var{x}, t);
  return out;
}

// (x : *) (y : *) (f : x -> y) (z : *) (g : y -> z)
inline Ctx comp_ctx() {
  return ctx_of({{"x", ty_obj()},
                 {"y", ty_obj()},
                 {"f", arrow("x", "y")},
                 {"z", ty_obj()},
                 {"g", arrow("y", "z")}});
}

// (x : *) (y : *) (f : x -> y) (g : x -> y) (a : f -> g)
inline Ctx disc2_ctx() {
  return ctx_of({{"x", ty_obj()},
                 {"y", ty_obj()},
                 {"f", arrow("x", "y")},
                 {"g", arrow("x", "y")},
                 {"a", ty_hom(arrow("x", "y"), v("f"), v("g"))}});
}

// (x : *) (y : *) (f : x -> y) (g : x -> y) (a : f -> g) (z : *) (h : y -> z)
inline Ctx whisker_ctx() {
  Ctx out = disc2_ctx();
  out.push(Var{"z"}, ty_obj());
  out.push(Var{"h"}, arrow("y", "z"));
  return out;
}

// Runs f and reports the error code it threw, if any.
template <class F>
std::optional<ErrorCode> code_of(F f) {
  try {
    f();
    return std::nullopt;
  } catch (const CheckError& e) {
    return e.code;
  }
}

}  // namespace fix
