#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcatt/kernel.hpp"
#include "mcatt/syntax.hpp"

namespace mcatt::frontend {

enum class Keyword { Coh, Mcoh, Let };

const char* keyword_name(Keyword k);

// Surface syntax before name resolution. Applications keep their head as a
// bare string; whether it is a variable or a definition is decided during
// elaboration.
struct SurfaceTm;
struct SurfaceTy;
using SurfaceTmPtr = std::shared_ptr<const SurfaceTm>;
using SurfaceTyPtr = std::shared_ptr<const SurfaceTy>;

struct SApp {
  std::string head;
  std::vector<SurfaceTmPtr> args;
};
struct SUnit {};
struct SExplicit {
  std::string head;
  std::vector<std::pair<std::string, SurfaceTmPtr>> assigns;
};

struct SurfaceTm {
  std::variant<SApp, SUnit, SExplicit> node;
  int line = 0, col = 0;
};

struct SObj {};
struct SOne {};
struct SArrow {
  SurfaceTmPtr src, tgt;
};
struct SHom {
  SurfaceTyPtr base;
  SurfaceTmPtr src, tgt;
};

struct SurfaceTy {
  std::variant<SObj, SOne, SArrow, SHom> node;
  int line = 0, col = 0;
};

struct Item {
  Keyword keyword;
  std::string name;
  std::vector<std::pair<std::string, SurfaceTyPtr>> telescope;
  SurfaceTyPtr result_ty;
  SurfaceTmPtr body;  // Let only
  Span span;
};

struct ParsedFile {
  std::string path;
  std::vector<Item> items;
};

// Throws CheckError with code ParseError on bad input.
ParsedFile parse(const std::string& text, const std::string& path);

// An accepted definition. For Coh/Mcoh the telescope and result type are
// the Catt-level index pair and `kind` records which side condition held;
// for Let the body is the fully elaborated term.
struct Def {
  Keyword keyword;
  std::string name;
  CohKind kind = CohKind::Op;
  Theory theory = Theory::Catt;  // the theory whose terms may use the name
  Ctx telescope;
  TyPtr result_ty;
  TmPtr body;
  Span span;
};

struct Env {
  Theory theory = Theory::Catt;
  std::vector<Def> defs;

  const Def* find(const std::string& name) const;
};

// Elaborates one item against the environment, kernel-checks it and
// appends the resulting definition. Throws CheckError on rejection.
const Def& elaborate_item(Env& env, const Item& item);

// Term and type elaboration against a binder scope, exposed for tests.
// `th` is the theory of the position being elaborated, which differs from
// env.theory inside the index data of an mcoh item.
TyPtr elaborate_ty(const Env& env, Theory th, const Ctx& scope, const SurfaceTy& a);
TmPtr elaborate_tm(const Env& env, Theory th, const Ctx& scope, const SurfaceTm& t);

struct SourceFile {
  std::string path;
  Theory theory = Theory::Catt;
  std::vector<Def> items;
};

// .catt selects Catt, .mcatt selects Mcatt; other extensions are refused.
Theory theory_for_path(const std::string& path);

// Parses and elaborates a whole file in order; stops at the first error.
SourceFile check_text(const std::string& text, const std::string& path, Theory th);
SourceFile check_file(const std::string& path, std::optional<Theory> override_th = {});

// Rendering back to parseable surface syntax. Coherence constructors are
// printed through the environment as explicit applications `name @[...]`;
// constructors that match no definition fall back to the structural debug
// form, which does not parse back.
std::string render_ty(const Env& env, const TyPtr& a);
std::string render_tm(const Env& env, const TmPtr& t);
std::string render_telescope(const Env& env, const Ctx& ctx);
std::string render_def(const Env& env, const Def& d);
std::string render(const SourceFile& f);

// One-line and JSON reports for CLI output.
std::string report_line(const CheckReport& r);
std::string report_json(const CheckReport& r);

}  // namespace mcatt::frontend
