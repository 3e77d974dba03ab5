#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcatt/frontend.hpp"
#include "mcatt/kernel.hpp"
#include "mcatt/oracle.hpp"
#include "mcatt/ps.hpp"
#include "mcatt/subst.hpp"
#include "mcatt/translate.hpp"

namespace fe = mcatt::frontend;
using namespace mcatt;

namespace {

struct Options {
  bool json = false;
  std::optional<Theory> theory;
};

std::optional<Theory> theory_from_string(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "glob") return Theory::Glob;
  if (s == "catt") return Theory::Catt;
  if (s == "glob_unit") return Theory::GlobUnit;
  if (s == "mcatt") return Theory::Mcatt;
  return std::nullopt;
}

std::string emit(const CheckReport& r, const Options& opt) {
  return (opt.json ? fe::report_json(r) : fe::report_line(r)) + "\n";
}

CheckReport failure_report(const CheckError& e, const std::string& judgment, Theory th) {
  CheckReport r;
  r.accepted = false;
  r.theory = th;
  r.judgment = judgment;
  r.error = ErrorInfo::from(e);
  return r;
}

std::pair<bool, std::string> check_one(const std::string& path, const Options& opt) {
  std::string out;
  Theory th = Theory::Catt;
  try {
    std::ifstream in(path);
    if (!in)
      throw CheckError(ErrorCode::ParseError, "cli", "cannot read '" + path + "'",
                       Span{path, 0, 0});
    std::stringstream buf;
    buf << in.rdbuf();
    th = opt.theory ? *opt.theory : fe::theory_for_path(path);
    fe::ParsedFile pf = fe::parse(buf.str(), path);
    fe::Env env;
    env.theory = th;
    for (const fe::Item& item : pf.items) {
      const fe::Def& d = fe::elaborate_item(env, item);
      CheckReport r;
      r.accepted = true;
      r.theory = th;
      r.judgment = fe::render_def(env, d);
      out += emit(r, opt);
    }
    return {true, out};
  } catch (const CheckError& e) {
    out += emit(failure_report(e, path, th), opt);
    return {false, out};
  }
}

int cmd_check(const std::vector<std::string>& files, const Options& opt) {
  std::vector<std::future<std::pair<bool, std::string>>> jobs;
  for (const std::string& f : files)
    jobs.push_back(std::async(std::launch::async, check_one, f, opt));
  bool ok = true;
  for (auto& j : jobs) {
    auto [file_ok, text] = j.get();
    std::cout << text;
    ok = ok && file_ok;
  }
  return ok ? 0 : 1;
}

// Desuspension of a whole file: coh items are kept verbatim as index
// material, each one followed by its image as a primed mcoh definition;
// let items are translated throughout. The result is a valid Mcatt file.
fe::SourceFile desusp_file(const fe::SourceFile& f) {
  fe::SourceFile out;
  out.path = f.path;
  out.theory = Theory::Mcatt;
  for (const fe::Def& d : f.items) {
    if (d.keyword == fe::Keyword::Coh) {
      out.items.push_back(d);
      fe::Def m = d;
      m.keyword = fe::Keyword::Mcoh;
      m.theory = Theory::Mcatt;
      m.name = d.name + "'";
      out.items.push_back(m);
    } else if (d.keyword == fe::Keyword::Mcoh) {
      out.items.push_back(d);
    } else {
      fe::Def t = d;
      t.name = d.name + "'";
      t.theory = Theory::Mcatt;
      t.telescope = desusp(d.telescope);
      t.result_ty = desusp(d.result_ty);
      t.body = desusp(d.body);
      out.items.push_back(t);
    }
  }
  return out;
}

// Reduced suspension of a whole file: coh items pass through, mcoh items
// become primed coh definitions with the same index, let items are
// normalized and suspended. Suspended binders include the reserved base
// variable, so this output is for inspection, not for parsing back.
fe::SourceFile rsusp_file(const fe::SourceFile& f) {
  fe::SourceFile out;
  out.path = f.path;
  out.theory = Theory::Catt;
  for (const fe::Def& d : f.items) {
    if (d.keyword == fe::Keyword::Coh) {
      out.items.push_back(d);
    } else if (d.keyword == fe::Keyword::Mcoh) {
      fe::Def c = d;
      c.keyword = fe::Keyword::Coh;
      c.theory = Theory::Catt;
      c.name = d.name + "'";
      out.items.push_back(c);
      infer(Theory::Catt, c.telescope,
            tm_coh(c.kind, c.telescope, c.result_ty, identity(c.telescope), Theory::Catt));
    } else {
      Ctx tele = normalize_ctx(Theory::Mcatt, d.telescope);
      fe::Def t = d;
      t.name = d.name + "'";
      t.theory = Theory::Catt;
      t.telescope = rsusp(tele);
      t.result_ty = rsusp(normalize(Theory::Mcatt, d.result_ty, tele), tele);
      t.body = rsusp(normalize(Theory::Mcatt, d.body, tele), tele);
      require_tm(Theory::Catt, t.telescope, t.body, t.result_ty);
      out.items.push_back(t);
    }
  }
  return out;
}

int cmd_translate(const std::string& path, const std::string& dir, const Options& opt) {
  try {
    fe::SourceFile f = fe::check_file(path, opt.theory);
    if (dir == "desusp" && f.theory != Theory::Catt)
      throw CheckError(ErrorCode::TheoryViolation, "cli",
                       "desusp starts from a Catt file", Span{path, 0, 0});
    if (dir == "rsusp" && f.theory != Theory::Mcatt)
      throw CheckError(ErrorCode::TheoryViolation, "cli",
                       "rsusp starts from an Mcatt file", Span{path, 0, 0});
    fe::SourceFile out = dir == "desusp" ? desusp_file(f) : rsusp_file(f);
    std::string text = fe::render(out);
    if (dir == "desusp") fe::check_text(text, path + " (desusp)", Theory::Mcatt);
    std::cout << text;
    return 0;
  } catch (const CheckError& e) {
    std::cerr << emit(failure_report(e, path, opt.theory.value_or(Theory::Catt)), opt);
    return 1;
  }
}

int cmd_adjunction(const std::string& path, const Options& opt) {
  try {
    fe::SourceFile f = fe::check_file(path, opt.theory);
    if (f.theory != Theory::Catt && f.theory != Theory::Mcatt)
      throw CheckError(ErrorCode::TheoryViolation, "cli",
                       "adjunction needs a Catt or Mcatt file", Span{path, 0, 0});
    bool ok = true;
    for (const fe::Def& d : f.items) {
      Ctx catt_ctx, mcatt_ctx;
      if (d.keyword != fe::Keyword::Let || f.theory == Theory::Catt) {
        catt_ctx = d.telescope;
        mcatt_ctx = desusp(d.telescope);
      } else {
        mcatt_ctx = normalize_ctx(Theory::Mcatt, d.telescope);
        catt_ctx = rsusp(mcatt_ctx);
      }
      AdjReport r = verify_adjunction(catt_ctx, mcatt_ctx);
      ok = ok && r.all();
      if (opt.json) {
        nlohmann::json j = {{"schema", 1},
                            {"item", d.name},
                            {"triangle1", r.triangle1_holds},
                            {"triangle2", r.triangle2_holds},
                            {"eta_iso", r.eta_iso_holds},
                            {"counterexample", r.counterexample}};
        std::cout << j.dump() << "\n";
      } else if (r.all()) {
        std::cout << "adjunction " << d.name << ": ok\n";
      } else {
        std::cout << "adjunction " << d.name << ": FAIL " << r.counterexample << "\n";
      }
    }
    return ok ? 0 : 1;
  } catch (const CheckError& e) {
    std::cerr << emit(failure_report(e, path, opt.theory.value_or(Theory::Catt)), opt);
    return 1;
  }
}

int cmd_enum_ps(int max_vars) {
  std::vector<Ctx> ctxs = oracle::enumerate_ps(max_vars);
  fe::Env env;
  for (const Ctx& c : ctxs) std::cout << fe::render_telescope(env, c) << "\n";
  std::cout << "count: " << ctxs.size() << " (pasting contexts with at most " << max_vars
            << " binders)\n";
  return 0;
}

int cmd_selftest() {
  bool ok = true;

  std::vector<Ctx> ps5 = oracle::enumerate_ps(5);
  size_t recognized = 0;
  for (const Ctx& c : oracle::enumerate_paired_ctxs(5))
    if (is_ps(c)) ++recognized;
  bool ps_ok = recognized == ps5.size();
  for (const Ctx& c : ps5) ps_ok = ps_ok && is_ps(c);
  std::cout << "selftest: ps enumeration vs recognizer: "
            << (ps_ok ? "ok" : "MISMATCH") << " (" << ps5.size() << " contexts)\n";
  ok = ok && ps_ok;

  size_t agree = 0, total = 0;
  bool search_ok = true;
  for (const Ctx& c : oracle::enumerate_glob_ctxs(4)) {
    for (Theory th : {Theory::Glob, Theory::GlobUnit}) {
      bool kernel = check_ctx(th, c).accepted;
      oracle::Verdict v = oracle::derivation_search(oracle::JCtx{th, c}, 100000);
      bool found = v == oracle::Verdict::Found;
      search_ok = search_ok && kernel == found && v != oracle::Verdict::OutOfFuel;
      agree += kernel == found;
      ++total;
    }
  }
  std::cout << "selftest: kernel vs derivation search: "
            << (search_ok ? "ok" : "MISMATCH") << " (" << agree << "/" << total
            << " judgments)\n";
  ok = ok && search_ok;

  bool adj_ok = true;
  for (const Ctx& c : ps5) adj_ok = adj_ok && verify_adjunction(c, desusp(c)).all();
  std::cout << "selftest: adjunction sweep: " << (adj_ok ? "ok" : "MISMATCH") << " ("
            << ps5.size() << " contexts)\n";
  ok = ok && adj_ok;

  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checker for weak omega-categories and their monoidal counterpart"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string theory_str, dir, tr_file, adj_file;
  bool json_check = false, json_tr = false, json_adj = false;
  int max_vars = 5;

  auto theory_opt = CLI::IsMember({"glob", "catt", "glob_unit", "mcatt"});

  CLI::App* c_check = app.add_subcommand("check", "type check files");
  c_check->add_option("files", files, "input files")->required();
  c_check->add_flag("--json", json_check, "machine readable reports");
  c_check->add_option("--theory", theory_str, "override the file theory")
      ->check(theory_opt);

  CLI::App* c_tr = app.add_subcommand("translate", "translate a file between the theories");
  c_tr->add_option("--dir", dir, "direction: desusp or rsusp")
      ->required()
      ->check(CLI::IsMember({"desusp", "rsusp"}));
  c_tr->add_option("file", tr_file, "input file")->required();
  c_tr->add_flag("--json", json_tr, "machine readable reports");

  CLI::App* c_adj =
      app.add_subcommand("adjunction", "verify the triangle identities over a file");
  c_adj->add_option("file", adj_file, "input file")->required();
  c_adj->add_flag("--json", json_adj, "machine readable reports");

  CLI::App* c_enum = app.add_subcommand("enum-ps", "enumerate pasting contexts");
  c_enum->add_option("--max-vars", max_vars, "largest binder count")->required();

  CLI::App* c_self =
      app.add_subcommand("selftest", "cross-check the kernel against the derivation search");

  CLI11_PARSE(app, argc, argv);

  Options opt;
  opt.theory = theory_from_string(theory_str);

  if (*c_check) {
    opt.json = json_check;
    return cmd_check(files, opt);
  }
  if (*c_tr) {
    opt.json = json_tr;
    return cmd_translate(tr_file, dir, opt);
  }
  if (*c_adj) {
    opt.json = json_adj;
    return cmd_adjunction(adj_file, opt);
  }
  if (*c_enum) return cmd_enum_ps(max_vars);
  if (*c_self) return cmd_selftest();
  return 2;
}
