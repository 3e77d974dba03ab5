// Acceptance suite: one line per criterion, exit code counts the failures.
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcatt/frontend.hpp"
#include "mcatt/kernel.hpp"
#include "mcatt/oracle.hpp"
#include "mcatt/ps.hpp"
#include "mcatt/subst.hpp"
#include "mcatt/syntax.hpp"
#include "mcatt/translate.hpp"

using namespace mcatt;

namespace {

constexpr long kFuel = 200000;

std::string corpus(const std::string& name) {
  return std::string(MCATT_CORPUS_DIR) + "/" + name;
}

int cli_exit(const std::string& args) {
  std::string cmd = std::string(MCATT_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc < 0 || !WIFEXITED(rc)) return -1;
  return WEXITSTATUS(rc);
}

std::string cli_output(const std::string& args) {
  std::string cmd = std::string(MCATT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "";
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

// Verdict of the first json line the checker printed for a file.
std::string cli_verdict(const std::string& path) {
  std::istringstream lines(cli_output("check --json " + path));
  std::string line;
  if (!std::getline(lines, line)) return "";
  return nlohmann::json::parse(line, nullptr, false).value("verdict", "");
}

TmPtr v(const std::string& name) { return tm_var(name); }
TyPtr arrow(const TmPtr& s, const TmPtr& t) { return ty_hom(ty_obj(), s, t); }

Ctx comp_ctx() {
  Ctx g;
  g.push(Var{"x"}, ty_obj());
  g.push(Var{"y"}, ty_obj());
  g.push(Var{"f"}, arrow(v("x"), v("y")));
  g.push(Var{"z"}, ty_obj());
  g.push(Var{"g"}, arrow(v("y"), v("z")));
  return g;
}

bool ok_tm(Theory th, const Ctx& ctx, const TmPtr& t, const TyPtr& a) {
  try {
    require_tm(th, ctx, t, a);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

// ------------------------------------------------------------ criterion 1

bool criterion1(std::string& note) {
  bool ok = cli_exit("check " + corpus("stdlib.catt")) == 0 &&
            cli_exit("check " + corpus("stdlib.mcatt")) == 0 &&
            cli_exit("check --json " + corpus("stdlib.catt")) == 0;

  // The composite of a composable pair elaborates to the expected judgment.
  frontend::SourceFile f = frontend::check_text(
      "coh comp (x : *) (y : *) (f : x -> y) (z : *) (g : y -> z) : x -> z\n"
      "let sample (u : *) (u' : *) (v : u -> u') (u'' : *) (w : u' -> u'') : u -> u''"
      " = comp v w\n",
      "sample.catt", Theory::Catt);
  Sub expect_args;
  expect_args.push(Var{"x"}, v("u"));
  expect_args.push(Var{"y"}, v("u'"));
  expect_args.push(Var{"f"}, v("v"));
  expect_args.push(Var{"z"}, v("u''"));
  expect_args.push(Var{"g"}, v("w"));
  TmPtr expect = tm_coh(CohKind::Op, comp_ctx(), arrow(v("x"), v("z")), expect_args,
                        Theory::Catt);
  ok = ok && equal(f.items[1].body, expect) &&
       equal(f.items[1].result_ty, arrow(v("u"), v("u''")));
  ok = ok && equal(infer(Theory::Catt, f.items[1].telescope, f.items[1].body),
                   arrow(v("u"), v("u''")));

  // The monoidal file provides the product, its associator, the neutral
  // element, a left unit and a left functoriality witness.
  frontend::SourceFile m = frontend::check_file(corpus("stdlib.mcatt"));
  for (const char* name : {"prod", "passoc", "e", "lune", "mwhisk_use"}) {
    bool found = false;
    for (const frontend::Def& d : m.items) found = found || d.name == name;
    ok = ok && found;
  }
  note = "corpus checks exit 0 and the pair composite elaborates as expected";
  return ok;
}

// ------------------------------------------------------------ criterion 2

bool criterion2(std::string& note) {
  bool ok = cli_exit("check " + corpus("bad_ps.catt")) == 1 &&
            cli_verdict(corpus("bad_ps.catt")) == "NotPs" &&
            cli_exit("check " + corpus("bad_sideconditions.catt")) == 1 &&
            cli_verdict(corpus("bad_sideconditions.catt")) == "SideConditionViolation" &&
            cli_exit("check " + corpus("bad_theory.catt")) == 1 &&
            cli_verdict(corpus("bad_theory.catt")) == "TheoryViolation" &&
            cli_exit("check " + corpus("bad_scope.catt")) == 1 &&
            cli_verdict(corpus("bad_scope.catt")) == "UnboundVariable";

  Ctx two;
  two.push(Var{"x"}, ty_obj());
  two.push(Var{"y"}, ty_obj());
  ok = ok && !is_ps(two);

  CheckReport eq = check_eq_side(comp_ctx(), arrow(v("x"), v("z")));
  ok = ok && !eq.accepted && eq.error && eq.error->code == ErrorCode::SideConditionViolation;
  CheckReport op = check_op_side(comp_ctx(), arrow(v("x"), v("y")));
  ok = ok && !op.accepted && op.error && op.error->code == ErrorCode::SideConditionViolation;
  ok = ok && check_op_side(comp_ctx(), arrow(v("x"), v("z"))).accepted;

  note = "negative corpus rejected with the expected codes";
  return ok;
}

// ------------------------------------------------------------ criterion 3

bool criterion3(std::string& note) {
  oracle::Gen gen(101);
  long instances = 0;
  bool ok = true;
  for (int round = 0; round < 80 && ok; ++round) {
    oracle::GenCtx a = gen.sample_ctx(7, 2);
    oracle::GenCtx b = gen.sample_ctx(5, 1);
    Sub g = gen.sample_sub(b, a.ctx);
    oracle::GenCtx c = gen.sample_ctx(4, 1);
    Sub d = gen.sample_sub(c, b.ctx);
    try {
      require_ctx(Theory::Catt, a.ctx);
      require_ctx(Theory::Catt, b.ctx);
      require_ctx(Theory::Catt, c.ctx);
      require_sub(Theory::Catt, b.ctx, g, a.ctx);
      require_sub(Theory::Catt, c.ctx, d, b.ctx);
    } catch (const CheckError&) {
      ok = false;
      break;
    }

    Sub gd = compose(g, d);
    for (const auto& [x, ty] : a.ctx.bindings) {
      ok = ok && equal(mcatt::apply(ty, identity(a.ctx)), ty);
      ok = ok && equal(mcatt::apply(mcatt::apply(ty, g), d), mcatt::apply(ty, gd));
      instances += 2;
    }
    for (const oracle::PoolEntry& e : a.pool) {
      ok = ok && equal(mcatt::apply(e.tm, identity(a.ctx)), e.tm);
      ok = ok && equal(mcatt::apply(mcatt::apply(e.tm, g), d), mcatt::apply(e.tm, gd));
      instances += 2;
    }
    ok = ok && compose(identity(a.ctx), g) == g;
    ok = ok && compose(g, identity(b.ctx)) == g;
    instances += 2;

    oracle::GenCtx e4 = gen.sample_ctx(3, 1);
    Sub t = gen.sample_sub(e4, c.ctx);
    ok = ok && compose(compose(g, d), t) == compose(g, compose(d, t));
    ++instances;
  }
  note = "laws held on " + std::to_string(instances) + " instances";
  return ok && instances >= 1000;
}

// ------------------------------------------------------------ criterion 4

bool criterion4(std::string& note) {
  oracle::Gen gen(202);
  long judgments = 0;
  bool ok = true;
  for (int round = 0; round < 40 && ok; ++round) {
    oracle::GenCtx a = gen.sample_ctx(6, 2);
    ok = ok && translate_ctx_correct(Direction::Desusp, a.ctx).accepted;
    ++judgments;
    for (const oracle::PoolEntry& e : a.pool) {
      ok = ok && translate_tm_correct(Direction::Desusp, a.ctx, e.tm).accepted;
      ok = ok && translate_ty_correct(Direction::Desusp, a.ctx, e.ty).accepted;
      judgments += 2;
    }
    oracle::GenCtx b = gen.sample_ctx(4, 1);
    Sub s = gen.sample_sub(b, a.ctx);
    ok = ok && translate_sub_correct(Direction::Desusp, b.ctx, s, a.ctx).accepted;
    ++judgments;

    Ctx m = gen.sample_mcatt_ctx(a.ctx);
    ok = ok && translate_ctx_correct(Direction::Rsusp, m).accepted;
    ++judgments;
    Ctx da = desusp(a.ctx);
    for (const oracle::PoolEntry& e : a.pool) {
      ok = ok && translate_tm_correct(Direction::Rsusp, da, desusp(e.tm)).accepted;
      ok = ok && translate_ty_correct(Direction::Rsusp, da, desusp(e.ty)).accepted;
      judgments += 2;
    }
    ok = ok && translate_sub_correct(Direction::Rsusp, desusp(b.ctx), desusp(s), da).accepted;
    ++judgments;
  }
  note = std::to_string(judgments) + " translated judgments re-checked";
  return ok && judgments >= 400;
}

// ------------------------------------------------------------ criterion 5

bool criterion5(std::string& note) {
  oracle::Gen gen(303);
  long checked = 0;
  bool ok = true;
  for (int round = 0; round < 40 && ok; ++round) {
    oracle::GenCtx a = gen.sample_ctx(6, 2);
    oracle::GenCtx b = gen.sample_ctx(4, 1);
    Ctx m = gen.sample_mcatt_ctx(b.ctx);
    AdjReport r = verify_adjunction(a.ctx, m);
    ok = ok && r.all() && r.counterexample.empty();
    ++checked;

    Sub s = gen.sample_sub(b, a.ctx);
    ok = ok && eta_natural(desusp(b.ctx), desusp(s), desusp(a.ctx));
    ++checked;
  }
  note = std::to_string(checked) + " adjunction and naturality checks";
  return ok && checked >= 80;
}

// ------------------------------------------------------------ criterion 6

bool criterion6(std::string& note) {
  oracle::Gen gen(404);
  long equations = 0;
  bool ok = true;
  for (int round = 0; round < 40 && ok; ++round) {
    oracle::GenCtx a = gen.sample_ctx(6, 2);
    Sub red = red_sub(a.ctx);
    Ctx n = normalize_ctx(Theory::Mcatt, desusp(a.ctx));
    for (const auto& [x, ty] : a.ctx.bindings) {
      TyPtr lhs = mcatt::apply(ty, red);
      TyPtr rhs = rsusp(normalize(Theory::Mcatt, desusp(ty), n), n);
      ok = ok && equal(lhs, rhs);
      ++equations;
    }
    for (const oracle::PoolEntry& e : a.pool) {
      TmPtr lhs = mcatt::apply(e.tm, red);
      TmPtr rhs = rsusp(normalize(Theory::Mcatt, desusp(e.tm), n), n);
      ok = ok && equal(lhs, rhs);
      ++equations;
    }
    oracle::GenCtx b = gen.sample_ctx(4, 1);
    Sub s = gen.sample_sub(b, a.ctx);
    ok = ok && counit_natural(b.ctx, s, a.ctx);
    ++equations;
  }
  note = std::to_string(equations) + " counit equations held exactly";
  return ok && equations >= 200;
}

// ------------------------------------------------------------ criterion 7

bool criterion7(std::string& note) {
  oracle::Gen gen(505);
  long checked = 0;
  bool ok = true;
  for (int round = 0; round < 40 && ok; ++round) {
    oracle::GenCtx a = gen.sample_ctx(6, 2);
    Ctx m = gen.sample_mcatt_ctx(a.ctx);
    Ctx n = normalize_ctx(Theory::Mcatt, m);
    ok = ok && normalize_ctx(Theory::Mcatt, n) == n;
    ++checked;
    for (const auto& [x, ty] : m.bindings) {
      TyPtr na = normalize(Theory::Mcatt, ty, m);
      ok = ok && equal(normalize(Theory::Mcatt, na, m), na);
      ++checked;
      if (is_unit(*ty)) {
        ok = ok && equal(normalize(Theory::Mcatt, tm_var(x), m), tm_unit());
        ++checked;
      }
    }
    for (const oracle::PoolEntry& e : a.pool) {
      TmPtr dt = desusp(e.tm);
      Ctx dm = desusp(a.ctx);
      TmPtr nt = normalize(Theory::Mcatt, dt, dm);
      ok = ok && equal(normalize(Theory::Mcatt, nt, dm), nt);
      ++checked;
    }
  }

  // Every accepted term of the unit type normalizes to the unit element.
  Ctx u;
  u.push(Var{"a"}, ty_unit());
  ok = ok && equal(normalize(Theory::GlobUnit, v("a"), u), tm_unit());
  ok = ok && equal(normalize(Theory::Mcatt, tm_unit(), u), tm_unit());
  ok = ok && ty_defeq(Theory::GlobUnit, u, ty_hom(ty_unit(), v("a"), tm_unit()), ty_obj());
  ok = ok && ty_defeq(Theory::Mcatt, u, ty_hom(ty_unit(), v("a"), tm_unit()), ty_obj());
  checked += 4;

  note = std::to_string(checked) + " normalization checks";
  return ok && checked >= 200;
}

// ------------------------------------------------------------ criterion 8

bool agree_ctx(const Ctx& g, Theory th, long& accepts, long& rejects) {
  bool kernel_ok = check_ctx(th, g).accepted;
  oracle::Verdict found = oracle::derivation_search(oracle::JCtx{th, g}, kFuel);
  if (found == oracle::Verdict::OutOfFuel) return false;
  (kernel_ok ? accepts : rejects) += 1;
  return kernel_ok == (found == oracle::Verdict::Found);
}

bool criterion8(std::string& note) {
  bool ok = true;
  long accepts = 0, rejects = 0;

  for (const Ctx& g : oracle::enumerate_glob_ctxs(5)) {
    for (Theory th : {Theory::Glob, Theory::GlobUnit}) {
      ok = ok && agree_ctx(g, th, accepts, rejects);

      // Mutations produce the rejected side of the space.
      if (g.size() >= 2) {
        Ctx swapped = g;
        std::swap(swapped.bindings[g.size() - 2], swapped.bindings[g.size() - 1]);
        if (!(swapped == g)) ok = ok && agree_ctx(swapped, th, accepts, rejects);
        Ctx dup = g;
        dup.bindings.back().first = dup.bindings.front().first;
        ok = ok && agree_ctx(dup, th, accepts, rejects);
      }
      Ctx unitized = g;
      unitized.push(Var{"u"}, ty_unit());
      ok = ok && agree_ctx(unitized, th, accepts, rejects);
    }
  }

  // Type judgments over the smaller universe, well- and ill-formed alike.
  for (const Ctx& g : oracle::enumerate_glob_ctxs(4)) {
    for (Theory th : {Theory::Glob, Theory::GlobUnit}) {
      std::vector<TyPtr> candidates{ty_obj(), ty_unit()};
      for (const auto& [x, xt] : g.bindings)
        for (const auto& [y, yt] : g.bindings)
          candidates.push_back(ty_hom(xt, tm_var(x), tm_var(y)));
      for (const TyPtr& a : candidates) {
        bool kernel_ok = check_ty(th, g, a).accepted;
        oracle::Verdict found = oracle::derivation_search(oracle::JTy{th, g, a}, kFuel);
        if (found == oracle::Verdict::OutOfFuel) return false;
        ok = ok && kernel_ok == (found == oracle::Verdict::Found);
        (kernel_ok ? accepts : rejects) += 1;
      }
    }
  }

  // Depth-one coherence terms over every small pasting scheme.
  for (const Ctx& g : oracle::enumerate_ps(5)) {
    auto [t, a] = oracle::full_composite(g);
    bool kernel_ok = ok_tm(Theory::Catt, g, t, a);
    oracle::Verdict found =
        oracle::derivation_search(oracle::JTm{Theory::Catt, g, t, a}, kFuel);
    if (found == oracle::Verdict::OutOfFuel) return false;
    ok = ok && kernel_ok && kernel_ok == (found == oracle::Verdict::Found);
    ++accepts;

    if (dim(g) > 0) {
      bool wrong_ok = ok_tm(Theory::Catt, g, t, ty_obj());
      oracle::Verdict wrong =
          oracle::derivation_search(oracle::JTm{Theory::Catt, g, t, ty_obj()}, kFuel);
      if (wrong == oracle::Verdict::OutOfFuel) return false;
      ok = ok && !wrong_ok && wrong_ok == (wrong == oracle::Verdict::Found);
      ++rejects;
    }

    auto [ct, ca] = oracle::composite_coherence(g);
    const auto* cc = as_coh(*ct);
    bool op_ok = check_op_side(cc->ps, cc->ty).accepted;
    oracle::Verdict op_found =
        oracle::derivation_search(oracle::JOp{cc->ps, cc->ty}, kFuel);
    bool eq_ok = check_eq_side(cc->ps, cc->ty).accepted;
    oracle::Verdict eq_found =
        oracle::derivation_search(oracle::JEq{cc->ps, cc->ty}, kFuel);
    if (op_found == oracle::Verdict::OutOfFuel || eq_found == oracle::Verdict::OutOfFuel)
      return false;
    ok = ok && op_ok == (op_found == oracle::Verdict::Found);
    ok = ok && eq_ok == (eq_found == oracle::Verdict::Found);
    (op_ok ? accepts : rejects) += 1;
    (eq_ok ? accepts : rejects) += 1;
  }

  // Pasting recognition over every paired telescope.
  for (const Ctx& g : oracle::enumerate_paired_ctxs(7)) {
    bool kernel_ok = is_ps(g);
    oracle::Verdict found = oracle::derivation_search(oracle::JPs{g}, kFuel);
    if (found == oracle::Verdict::OutOfFuel) return false;
    ok = ok && kernel_ok == (found == oracle::Verdict::Found);
    (kernel_ok ? accepts : rejects) += 1;
  }

  // Substitution judgments between the small telescopes.
  std::vector<Ctx> small = oracle::enumerate_glob_ctxs(3);
  for (const Ctx& dom : small) {
    for (const Ctx& tgt : small) {
      if (dom.size() != tgt.size()) continue;
      Sub s;
      for (size_t i = 0; i < tgt.size(); ++i)
        s.push(tgt.bindings[i].first, tm_var(dom.bindings[i].first));
      bool kernel_ok = check_sub(Theory::Glob, dom, s, tgt).accepted;
      oracle::Verdict found =
          oracle::derivation_search(oracle::JSub{Theory::Glob, dom, s, tgt}, kFuel);
      if (found == oracle::Verdict::OutOfFuel) return false;
      ok = ok && kernel_ok == (found == oracle::Verdict::Found);
      (kernel_ok ? accepts : rejects) += 1;
    }
  }

  // The two enumeration routes derive the same pasting-scheme counts.
  std::vector<size_t> grown, filtered;
  for (int n : {1, 3, 5, 7}) {
    grown.push_back(oracle::enumerate_ps(n).size());
    std::set<std::string> dedup;
    for (const Ctx& g : oracle::enumerate_paired_ctxs(n))
      if (is_ps(g)) dedup.insert(show(canon_ctx(g)));
    filtered.push_back(dedup.size());
  }
  ok = ok && grown == filtered;

  std::string counts;
  for (size_t k : grown) counts += (counts.empty() ? "" : ",") + std::to_string(k);
  note = std::to_string(accepts) + " accepts and " + std::to_string(rejects) +
         " rejects agree; ps counts " + counts;
  return ok && accepts > 0 && rejects > 0;
}

// ------------------------------------------------------------ criterion 9

bool criterion9(std::string& note) {
  oracle::Gen gen(606);
  long checked = 0;
  bool ok = true;

  std::vector<Ctx> samples;
  samples.push_back(Ctx{});
  Ctx u;
  u.push(Var{"u"}, ty_unit());
  samples.push_back(u);
  Ctx sugar;
  sugar.push(Var{"x"}, ty_obj());
  samples.push_back(sugar);
  for (int round = 0; round < 60; ++round) {
    oracle::GenCtx a = gen.sample_ctx(6, 2);
    samples.push_back(gen.sample_mcatt_ctx(a.ctx));
  }

  for (const Ctx& m : samples) {
    try {
      require_ctx(Theory::Mcatt, m);
    } catch (const CheckError&) {
      ok = false;
      break;
    }
    Ctx s = rsusp(normalize_ctx(Theory::Mcatt, m));
    int objs = 0;
    for (const auto& [x, a] : s.bindings) objs += is_obj(*a) ? 1 : 0;
    ok = ok && objs == 1 && s.bindings[0].first == Var::base() &&
         is_obj(*s.bindings[0].second);
    ok = ok && check_ctx(Theory::Catt, s).accepted;
    ++checked;
  }
  note = std::to_string(checked) + " suspended contexts have a single object binder";
  return ok && checked >= 60;
}

struct Criterion {
  int number;
  const char* what;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const Criterion table[] = {
      {1, "positive corpus is accepted", criterion1},
      {2, "negative corpus is rejected with the expected codes", criterion2},
      {3, "substitution laws on random accepted data", criterion3},
      {4, "translated judgments re-check in the target theory", criterion4},
      {5, "triangle identities, unit isomorphism and unit naturality", criterion5},
      {6, "counit equations hold exactly", criterion6},
      {7, "normalization is idempotent and collapses unit terms", criterion7},
      {8, "kernel agrees with the derivation search and both ps counts match", criterion8},
      {9, "every suspended context has exactly one object binder", criterion9},
  };

  int failures = 0;
  for (const Criterion& c : table) {
    std::string note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("unexpected exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", c.number, c.what,
                note.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
