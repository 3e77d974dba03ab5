#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "mcatt/kernel.hpp"
#include "mcatt/subst.hpp"
#include "mcatt/syntax.hpp"
#include "mcatt/translate.hpp"

using namespace mcatt;
using fix::arrow;
using fix::code_of;
using fix::ctx_of;
using fix::sub_of;
using fix::v;

namespace {

const Theory kAll[] = {Theory::Glob, Theory::Catt, Theory::GlobUnit, Theory::Mcatt};

TmPtr comp_at(Sub args, Theory th = Theory::Catt) {
  return tm_coh(CohKind::Op, fix::comp_ctx(), arrow("x", "z"), std::move(args), th);
}

TmPtr id_at(TmPtr point, Theory th = Theory::Catt) {
  return tm_coh(CohKind::Eq, ctx_of({{"x", ty_obj()}}), arrow("x", "x"),
                sub_of({{"x", std::move(point)}}), th);
}

TyPtr obj_normal() { return ty_hom(ty_unit(), tm_unit(), tm_unit()); }

}  // namespace

TEST_CASE("globular telescopes are accepted in every theory") {
  for (Theory th : kAll) {
    CHECK_NOTHROW(require_ctx(th, Ctx{}));
    CHECK_NOTHROW(require_ctx(th, fix::comp_ctx()));
    CHECK_NOTHROW(require_ctx(th, fix::disc2_ctx()));
    CHECK_NOTHROW(require_ctx(th, fix::whisker_ctx()));
  }
}

TEST_CASE("unit binders need a unit theory") {
  Ctx g = ctx_of({{"u", ty_unit()}});
  CHECK_NOTHROW(require_ctx(Theory::GlobUnit, g));
  CHECK_NOTHROW(require_ctx(Theory::Mcatt, g));
  CHECK(code_of([&] { require_ctx(Theory::Glob, g); }) == ErrorCode::TheoryViolation);
  CHECK(code_of([&] { require_ctx(Theory::Catt, g); }) == ErrorCode::TheoryViolation);
}

TEST_CASE("context formation failures") {
  CHECK(code_of([] { require_ctx(Theory::Catt, ctx_of({{"x", ty_obj()}, {"x", ty_obj()}})); }) ==
        ErrorCode::DuplicateVar);
  CHECK(code_of([] {
          require_ctx(Theory::Catt, ctx_of({{"x", ty_obj()}, {"f", arrow("x", "q")}}));
        }) == ErrorCode::ScopeError);
  // The source of the binder type is an arrow, its base expects an object.
  CHECK(code_of([] {
          require_ctx(Theory::Catt, ctx_of({{"x", ty_obj()},
                                            {"y", ty_obj()},
                                            {"f", arrow("x", "y")},
                                            {"b", arrow("f", "x")}}));
        }) == ErrorCode::TypeError);
}

TEST_CASE("variable and unit terms") {
  Ctx g = fix::comp_ctx();
  CHECK(equal(infer(Theory::Catt, g, v("f")), arrow("x", "y")));
  CHECK(code_of([&] { infer(Theory::Catt, g, v("q")); }) == ErrorCode::UnboundVariable);
  CHECK(equal(infer(Theory::GlobUnit, g, tm_unit()), ty_unit()));
  CHECK(code_of([&] { infer(Theory::Catt, g, tm_unit()); }) == ErrorCode::TheoryViolation);
  CHECK(code_of([&] { require_ty(Theory::Glob, g, ty_unit()); }) == ErrorCode::TheoryViolation);
}

TEST_CASE("hom formation checks both endpoints") {
  Ctx g = fix::disc2_ctx();
  CHECK_NOTHROW(require_ty(Theory::Catt, g, ty_hom(arrow("x", "y"), v("f"), v("g"))));
  CHECK(code_of([&] { require_ty(Theory::Catt, g, arrow("f", "x")); }) ==
        ErrorCode::TypeMismatch);
  CHECK(code_of([&] { require_ty(Theory::Catt, g, arrow("x", "a")); }) ==
        ErrorCode::TypeMismatch);
  CHECK(code_of([&] { require_ty(Theory::Catt, g, arrow("x", "q")); }) ==
        ErrorCode::UnboundVariable);
}

TEST_CASE("operations instantiate to their substituted type") {
  Ctx g = fix::comp_ctx();
  CHECK(equal(infer(Theory::Catt, g, comp_at(identity(g))), arrow("x", "z")));

  Ctx w = fix::whisker_ctx();
  TmPtr t = comp_at(
      sub_of({{"x", v("x")}, {"y", v("y")}, {"f", v("f")}, {"z", v("z")}, {"g", v("h")}}));
  CHECK(equal(infer(Theory::Catt, w, t), arrow("x", "z")));

  // Nested arguments: comp (id x) f in the 2-disc telescope.
  TmPtr n = comp_at(
      sub_of({{"x", v("x")}, {"y", v("x")}, {"f", id_at(v("x"))}, {"z", v("y")}, {"g", v("f")}}));
  CHECK(equal(infer(Theory::Catt, fix::disc2_ctx(), n), arrow("x", "y")));
}

TEST_CASE("coherence constructors respect the theory gates") {
  Ctx g = fix::comp_ctx();
  TmPtr t = comp_at(identity(g));
  CHECK(code_of([&] { infer(Theory::Glob, g, t); }) == ErrorCode::TheoryViolation);
  CHECK(code_of([&] { infer(Theory::GlobUnit, g, t); }) == ErrorCode::TheoryViolation);
  CHECK(code_of([&] { infer(Theory::Catt, g, comp_at(identity(g), Theory::Mcatt)); }) ==
        ErrorCode::TheoryViolation);
  CHECK(code_of([&] { infer(Theory::Mcatt, g, comp_at(identity(g), Theory::Catt)); }) ==
        ErrorCode::TheoryViolation);
}

TEST_CASE("the index of a constructor must be a pasting scheme") {
  Ctx two = ctx_of({{"x", ty_obj()}, {"y", ty_obj()}});
  TmPtr t = tm_coh(CohKind::Eq, two, arrow("x", "y"), identity(two), Theory::Catt);
  CHECK(code_of([&] { infer(Theory::Catt, two, t); }) == ErrorCode::NotPs);
}

TEST_CASE("side condition of an operation") {
  Ctx g = fix::comp_ctx();
  CHECK_NOTHROW(require_op_side(g, arrow("x", "z")));
  CHECK(code_of([&] { require_op_side(g, arrow("x", "y")); }) ==
        ErrorCode::SideConditionViolation);
  CHECK(code_of([&] { require_op_side(g, arrow("y", "z")); }) ==
        ErrorCode::SideConditionViolation);
  CHECK(code_of([&] { require_op_side(ctx_of({{"x", ty_obj()}}), ty_obj()); }) ==
        ErrorCode::SideConditionViolation);

  Ctx w = fix::whisker_ctx();
  Sub whisk_src = sub_of(
      {{"x", v("x")}, {"y", v("y")}, {"f", v("f")}, {"z", v("z")}, {"g", v("h")}});
  Sub whisk_tgt = sub_of(
      {{"x", v("x")}, {"y", v("y")}, {"f", v("g")}, {"z", v("z")}, {"g", v("h")}});
  CHECK_NOTHROW(require_op_side(
      w, ty_hom(arrow("x", "z"), comp_at(whisk_src), comp_at(whisk_tgt))));
}

TEST_CASE("side condition of a coherence") {
  Ctx g = fix::comp_ctx();
  TmPtr full = comp_at(identity(g));
  CHECK_NOTHROW(require_eq_side(g, ty_hom(arrow("x", "z"), full, full)));
  CHECK(code_of([&] { require_eq_side(g, arrow("x", "z")); }) ==
        ErrorCode::SideConditionViolation);
  CHECK(code_of([&] { require_eq_side(g, ty_hom(arrow("x", "z"), full, v("f"))); }) ==
        ErrorCode::SideConditionViolation);
  CHECK_NOTHROW(require_eq_side(ctx_of({{"x", ty_obj()}}), arrow("x", "x")));
}

TEST_CASE("argument lists are checked against the index telescope") {
  Ctx g = fix::comp_ctx();
  CHECK(code_of([&] { infer(Theory::Catt, g, comp_at(identity(g).prefix(4))); }) ==
        ErrorCode::ArityMismatch);

  Sub renamed = sub_of(
      {{"x", v("x")}, {"y", v("y")}, {"q", v("f")}, {"z", v("z")}, {"g", v("g")}});
  CHECK(code_of([&] { infer(Theory::Catt, g, comp_at(renamed)); }) == ErrorCode::NameMismatch);

  Sub illtyped = sub_of(
      {{"x", v("x")}, {"y", v("y")}, {"f", v("f")}, {"z", v("z")}, {"g", v("f")}});
  CHECK(code_of([&] { infer(Theory::Catt, g, comp_at(illtyped)); }) ==
        ErrorCode::SubstMismatch);
}

TEST_CASE("substitution judgments") {
  Ctx w = fix::whisker_ctx();
  Ctx g = fix::comp_ctx();
  Sub s = sub_of({{"x", v("x")}, {"y", v("y")}, {"f", v("f")}, {"z", v("z")}, {"g", v("h")}});
  CHECK_NOTHROW(require_sub(Theory::Catt, w, s, g));
  CHECK(check_sub(Theory::Catt, w, s, g).accepted);

  CHECK(code_of([&] { require_sub(Theory::Catt, w, s.prefix(3), g); }) ==
        ErrorCode::ArityMismatch);
  Sub wrong_name = sub_of(
      {{"x", v("x")}, {"b", v("y")}, {"f", v("f")}, {"z", v("z")}, {"g", v("h")}});
  CHECK(code_of([&] { require_sub(Theory::Catt, w, wrong_name, g); }) ==
        ErrorCode::NameMismatch);
  Sub wrong_type = sub_of(
      {{"x", v("x")}, {"y", v("y")}, {"f", v("h")}, {"z", v("z")}, {"g", v("h")}});
  CHECK(code_of([&] { require_sub(Theory::Catt, w, wrong_type, g); }) ==
        ErrorCode::TypeMismatch);
}

TEST_CASE("checked terms convert up to definitional equality") {
  Ctx g = fix::comp_ctx();
  CHECK_NOTHROW(require_tm(Theory::Catt, g, v("f"), arrow("x", "y")));
  CHECK(code_of([&] { require_tm(Theory::Catt, g, v("f"), arrow("x", "z")); }) ==
        ErrorCode::TypeMismatch);

  Ctx u = ctx_of({{"a", ty_unit()}});
  CHECK_NOTHROW(require_tm(Theory::GlobUnit, u, v("a"), ty_unit()));
  // Every inhabitant of the unit type is the unit element.
  CHECK(tm_defeq(Theory::GlobUnit, u, v("a"), tm_unit()));
  CHECK_FALSE(tm_defeq(Theory::Catt, fix::comp_ctx(), v("f"), v("g")));
}

TEST_CASE("unit normal forms") {
  Ctx u = ctx_of({{"a", ty_unit()}, {"x", ty_obj()}});
  CHECK(equal(normalize(Theory::GlobUnit, v("a"), u), tm_unit()));
  CHECK(equal(normalize(Theory::GlobUnit, v("x"), u), v("x")));
  CHECK(equal(normalize(Theory::GlobUnit, ty_obj(), u), obj_normal()));
  CHECK(equal(normalize(Theory::Catt, ty_obj(), u), ty_obj()));
  CHECK(equal(normalize(Theory::Catt, v("a"), u), v("a")));

  Ctx n = normalize_ctx(Theory::Mcatt, ctx_of({{"a", ty_unit()}, {"x", ty_obj()}}));
  CHECK(n == ctx_of({{"a", ty_unit()}, {"x", obj_normal()}}));
}

TEST_CASE("unit slots of a monoidal constructor normalize to the unit element") {
  Ctx g = ctx_of({{"c", ty_unit()}, {"p", obj_normal()}});
  TmPtr t = desusp(comp_at(sub_of(
      {{"x", v("c")}, {"y", v("c")}, {"f", v("p")}, {"z", v("c")}, {"g", v("p")}})));
  TmPtr n = normalize(Theory::Mcatt, t, g);
  const auto* c = as_coh(*n);
  REQUIRE(c);
  CHECK(equal(c->args.assigns[0].second, tm_unit()));
  CHECK(equal(c->args.assigns[1].second, tm_unit()));
  CHECK(equal(c->args.assigns[2].second, v("p")));
  CHECK(equal(c->args.assigns[3].second, tm_unit()));
}

TEST_CASE("normalization is idempotent") {
  Ctx u = ctx_of({{"a", ty_unit()}, {"x", ty_obj()}});
  for (const TmPtr& t : {v("a"), v("x"), tm_unit()}) {
    TmPtr n = normalize(Theory::GlobUnit, t, u);
    CHECK(equal(normalize(Theory::GlobUnit, n, u), n));
  }
  TyPtr a = normalize(Theory::GlobUnit, ty_hom(ty_obj(), v("x"), v("x")), u);
  CHECK(equal(normalize(Theory::GlobUnit, a, u), a));
}

TEST_CASE("the object shorthand is definitionally a hom over the unit") {
  Ctx u = ctx_of({{"a", ty_unit()}});
  CHECK(ty_defeq(Theory::GlobUnit, u, ty_hom(ty_unit(), v("a"), tm_unit()), ty_obj()));
  CHECK(ty_defeq(Theory::Mcatt, u, ty_hom(ty_unit(), v("a"), tm_unit()), ty_obj()));
  CHECK_FALSE(ty_defeq(Theory::Catt, u, ty_hom(ty_unit(), v("a"), tm_unit()), ty_obj()));
}

TEST_CASE("definitional equality compares indices up to renaming") {
  Ctx g = ctx_of({{"p", ty_obj()}});
  Renaming r{{Var{"x"}, Var{"w"}}};
  TmPtr t1 = id_at(v("p"));
  TmPtr t2 = tm_coh(CohKind::Eq, rename(ctx_of({{"x", ty_obj()}}), r),
                    rename(arrow("x", "x"), r), sub_of({{"w", v("p")}}), Theory::Catt);
  CHECK_FALSE(equal(t1, t2));
  CHECK(tm_defeq(Theory::Catt, g, t1, t2));
  CHECK(sub_defeq(Theory::Catt, g, sub_of({{"x", t1}}), sub_of({{"x", t2}})));
  CHECK_FALSE(sub_defeq(Theory::Catt, g, sub_of({{"x", t1}}), sub_of({{"y", t2}})));
}

TEST_CASE("monoidal constructors check their arguments one dimension down") {
  // prod a b : * in (a : *) (b : *), read through the desuspended index.
  Ctx g = ctx_of({{"a", obj_normal()}, {"b", obj_normal()}});
  TmPtr prod = comp_at(sub_of({{"x", tm_unit()},
                               {"y", tm_unit()},
                               {"f", v("a")},
                               {"z", tm_unit()},
                               {"g", v("b")}}),
                       Theory::Mcatt);
  CHECK(equal(infer(Theory::Mcatt, g, prod), obj_normal()));
  CHECK(code_of([&] { infer(Theory::Catt, g, prod); }) == ErrorCode::TheoryViolation);

  Sub illtyped = sub_of({{"x", tm_unit()},
                         {"y", tm_unit()},
                         {"f", v("a")},
                         {"z", tm_unit()},
                         {"g", tm_unit()}});
  CHECK(code_of([&] { infer(Theory::Mcatt, g, comp_at(illtyped, Theory::Mcatt)); }) ==
        ErrorCode::SubstMismatch);
}

TEST_CASE("report wrappers carry the error information") {
  CheckReport ok = check_ctx(Theory::Catt, fix::comp_ctx());
  CHECK(ok.accepted);
  CHECK(ok.theory == Theory::Catt);
  CHECK_FALSE(ok.error.has_value());

  CheckReport bad = check_ctx(Theory::Catt, ctx_of({{"x", ty_obj()}, {"x", ty_obj()}}));
  CHECK_FALSE(bad.accepted);
  REQUIRE(bad.error.has_value());
  CHECK(bad.error->code == ErrorCode::DuplicateVar);
  CHECK(bad.error->rule == "ce");

  CheckReport inferred = infer_tm(Theory::Catt, fix::comp_ctx(), comp_at(identity(fix::comp_ctx())));
  CHECK(inferred.accepted);
  CHECK(equal(inferred.inferred, arrow("x", "z")));

  CHECK_FALSE(check_op_side(fix::comp_ctx(), arrow("x", "y")).accepted);
  CHECK(check_eq_side(ctx_of({{"x", ty_obj()}}), arrow("x", "x")).accepted);
}
