// Command-line front end: loads JSON descriptions of algebras and modules,
// runs the requested construction or verification, and prints a report as
// JSON or text. Exit codes: 0 success / property holds, 1 property fails,
// 2 invalid input, 3 hypotheses unmet or beyond capability.

#include "gradres/criteria.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace gradres;
namespace fs = std::filesystem;

struct Options {
  std::string command;
  std::string verify_target;
  std::string module_path;    // primary (left) module
  std::string algebra_path;   // overrides the module's own algebra reference
  std::string right_path;     // right module (tensor arguments, twists)
  std::string submodule_path;
  std::string ideal_path;
  std::string action_path;
  std::string subalgebra;     // "ground", "vertices", or a file path
  std::string config_path;
  std::size_t kmax = 4;
  bool graded = false;
  std::int64_t beta = 0;
  std::string format = "text";
  std::uint64_t seed = 20260813;
  bool with_matrices = false;
};

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(std::size_t(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v.at(0).is_array()) ||
          (v.is_array() && !v.empty() && v.at(0).is_object())) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 1);
      } else if (v.is_array()) {
        os << pad << k << ": (";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) os << ",";
          if (v.at(i).is_string())
            os << v.at(i).get<std::string>();
          else
            os << v.at(i).dump();
        }
        os << ")\n";
      } else if (v.is_string()) {
        os << pad << k << ": " << v.get<std::string>() << "\n";
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render_text(v, os, indent + 1);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const Json& j, const Options& opt) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    render_text(j, std::cout, 0);
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

FieldSpec field_of_primary(const Options& opt) {
  // the algebra file is authoritative; otherwise the first file that
  // declares a field; default F_2
  std::vector<std::string> candidates;
  if (!opt.algebra_path.empty()) candidates.push_back(opt.algebra_path);
  for (const auto& p : {opt.module_path, opt.action_path, opt.right_path})
    if (!p.empty()) candidates.push_back(p);
  for (const auto& path : candidates) {
    const Json j = load_json_file(path);
    if (j.is_object() && j.contains("field")) return field_from_json(j.at("field"));
    if (j.is_object() && j.contains("algebra")) {
      const Json aj = resolve_ref(j.at("algebra"), fs::path(path).parent_path());
      if (aj.contains("field")) return field_from_json(aj.at("field"));
    }
  }
  return FieldSpec::primes(2);
}

template <FieldLike F>
struct Loaded {
  AlgebraPtr<F> alg;
  Module<F> mod;
};

/// The primary module: from --module, with the algebra taken from --algebra
/// when given and from the module file's own "algebra" member otherwise.
template <FieldLike F>
Loaded<F> load_primary(const F& f, const Options& opt) {
  if (opt.module_path.empty()) throw input_error("missing --module");
  const Json mj = load_json_file(opt.module_path);
  const fs::path mdir = fs::path(opt.module_path).parent_path();
  if (!opt.algebra_path.empty()) {
    const AlgebraPtr<F> a = algebra_from_json(f, load_json_file(opt.algebra_path));
    return {a, module_from_json(f, mj, a)};
  }
  auto [a, m] = load_module_json(f, mj, mdir);
  return {a, std::move(m)};
}

template <FieldLike F>
AlgebraPtr<F> load_algebra(const F& f, const Options& opt) {
  if (opt.algebra_path.empty()) throw input_error("missing --algebra");
  return algebra_from_json(f, load_json_file(opt.algebra_path));
}

template <FieldLike F>
Loaded<F> load_right(const F& f, const Options& opt) {
  if (opt.right_path.empty()) throw input_error("missing --right");
  const Json mj = load_json_file(opt.right_path);
  auto [a, m] = load_module_json(f, mj, fs::path(opt.right_path).parent_path());
  return {a, std::move(m)};
}

template <FieldLike F>
SubalgebraR<F> load_subalgebra(const F& f, const Options& opt,
                               const GradedAlgebra<F>& a) {
  if (opt.subalgebra.empty() || opt.subalgebra == "ground")
    return ground_field_subalgebra(a);
  if (opt.subalgebra == "vertices" || opt.subalgebra == "vertex_span")
    return subalgebra_from_json(f, Json{{"kind", "vertex_span"}}, a);
  return subalgebra_from_json(f, load_json_file(opt.subalgebra), a);
}

template <FieldLike F>
Matrix<F> load_ideal_gens(const F& f, const Options& opt, std::size_t dim) {
  if (opt.ideal_path.empty()) throw input_error("missing --ideal");
  return generators_from_json(f, load_json_file(opt.ideal_path), dim);
}

/// A twisted product from --algebra (the graded left factor) and --action
/// ({"algebra": <right factor>, "sigma": [matrices], "monoid": optional}).
template <FieldLike F>
SmashAlgebra<F> load_smash(const F& f, const Options& opt) {
  const AlgebraPtr<F> a = load_algebra(f, opt);
  if (!a->is_graded()) throw input_error("smash: the left factor must be graded");
  if (opt.action_path.empty()) throw input_error("missing --action");
  const Json aj = load_json_file(opt.action_path);
  const fs::path adir = fs::path(opt.action_path).parent_path();
  if (!aj.contains("algebra")) throw input_error("action: missing \"algebra\"");
  GradedAlgebra<F> b = *algebra_from_json(f, resolve_ref(aj.at("algebra"), adir));
  GammaAlgebra<F> g =
      action_from_json(f, aj, std::move(b), a->grading().monoid);
  return smash(a, std::move(g));
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

template <FieldLike F>
int cmd_resolve(const F& f, const Options& opt) {
  const Loaded<F> in = load_primary(f, opt);
  if (opt.graded && !in.mod.is_graded())
    throw input_error("resolve: --graded needs a graded module");
  const Resolution<F> res = minimal_resolution(in.mod, opt.kmax, opt.graded);
  emit(resolution_to_json(f, res, opt.with_matrices || opt.format == "json"), opt);
  return 0;
}

template <FieldLike F>
int cmd_cover(const F& f, const Options& opt) {
  const Loaded<F> in = load_primary(f, opt);
  if (opt.graded && !in.mod.is_graded())
    throw input_error("cover: --graded needs a graded module");
  const Cover<F> cov =
      projective_cover(opt.graded ? in.mod : forget(in.mod), opt.graded);
  Json j{{"dim", cov.p.dim()},
         {"kernel_dim", cov.kernel.cols()},
         {"graded", opt.graded}};
  if (opt.with_matrices || opt.format == "json")
    j["cover"] = matrix_to_json(f, cov.pi);
  emit(j, opt);
  return 0;
}

template <FieldLike F>
int cmd_superfluous(const F& f, const Options& opt) {
  const Loaded<F> in = load_primary(f, opt);
  if (opt.submodule_path.empty()) throw input_error("missing --submodule");
  const Matrix<F> gens =
      generators_from_json(f, load_json_file(opt.submodule_path), in.mod.dim());
  const Module<F> plain = forget(in.mod);
  const Matrix<F> sub = submodule_closure(plain, gens);
  const bool verdict = is_superfluous(plain, sub);
  emit(Json{{"superfluous", verdict},
            {"submodule_dim", sub.cols()},
            {"radical_dim", radical_submodule(plain).cols()}},
       opt);
  return verdict ? 0 : 1;
}

template <FieldLike F>
int cmd_smash(const F& f, const Options& opt) {
  const SmashAlgebra<F> s = load_smash(f, opt);
  emit(smash_to_json(s), opt);
  return 0;
}

template <FieldLike F>
int cmd_twist(const F& f, const Options& opt) {
  const SmashAlgebra<F> s = load_smash(f, opt);
  if (opt.module_path.empty()) throw input_error("missing --module");
  if (opt.right_path.empty()) throw input_error("missing --right");
  const Module<F> m = module_from_json(f, load_json_file(opt.module_path), s.a);
  const Module<F> n = module_from_json(f, load_json_file(opt.right_path), s.b);
  const Module<F> tw = twist_module(s, m, n);
  Json j = module_to_json(tw, false);
  j["dims"] = Json::array({m.dim(), n.dim(), tw.dim()});
  emit(j, opt);
  return 0;
}

template <FieldLike F>
int cmd_tor(const F& f, const Options& opt, bool relative) {
  const Loaded<F> left = load_primary(f, opt);
  const Loaded<F> right = load_right(f, opt);
  TorTable t;
  if (relative) {
    const SubalgebraR<F> r = load_subalgebra(f, opt, *left.alg);
    t = relative_tor(right.mod, left.mod, r, opt.kmax);
  } else {
    t = tor(right.mod, left.mod, opt.kmax);
  }
  emit(tor_to_json(t), opt);
  return 0;
}

template <FieldLike F>
int cmd_bar(const F& f, const Options& opt) {
  const Loaded<F> in = load_primary(f, opt);
  const SubalgebraR<F> r = load_subalgebra(f, opt, *in.alg);
  const BarResolution<F> bar = bar_resolution(in.alg, r, forget(in.mod), opt.kmax);
  Json j{{"dims", bar.dims()},
         {"base_dim", bar.base.dim()},
         {"certified", true}};
  if (opt.with_matrices || opt.format == "json") {
    Json diffs = Json::array();
    for (const auto& d : bar.diffs) diffs.push_back(matrix_to_json(f, d));
    j["diffs"] = std::move(diffs);
  }
  emit(j, opt);
  return 0;
}

template <FieldLike F>
int cmd_stratify(const F& f, const Options& opt) {
  const AlgebraPtr<F> a = load_algebra(f, opt);
  const Matrix<F> gens = load_ideal_gens(f, opt, a->dim());
  std::optional<SubalgebraR<F>> r;
  if (!opt.subalgebra.empty()) r = load_subalgebra(f, opt, *a);
  const StratifyingReport rep = stratifying_check(a, gens, opt.kmax, r);
  emit(stratifying_to_json(rep), opt);
  return rep.ordinary_stratifying ? 0 : 1;
}

// --- verify targets --------------------------------------------------------

template <FieldLike F>
int verify_thm26(const F& f, const Options& opt) {
  const Loaded<F> in = load_primary(f, opt);
  if (!in.mod.is_graded()) throw input_error("thm2.6: the module must be graded");
  const Thm26Report rep = theorem_2_6_check(in.mod, opt.kmax);
  emit(thm26_to_json(rep), opt);
  if (!rep.hypotheses_ok) return 3;
  return rep.holds ? 0 : 1;
}

template <FieldLike F>
int verify_prop32(const F& f, const Options& opt) {
  const SmashAlgebra<F> s = load_smash(f, opt);
  if (opt.right_path.empty()) throw input_error("missing --right");
  const Module<F> n =
      module_from_json(f, load_json_file(opt.right_path), s.b);
  const bool ok = prop_3_2_check(s, MonoidElt{opt.beta}, n);
  emit(Json{{"beta", opt.beta}, {"holds", ok}}, opt);
  return ok ? 0 : 1;
}

template <FieldLike F>
int verify_thm36(const F& f, const Options& opt) {
  const SmashAlgebra<F> s = load_smash(f, opt);
  if (opt.module_path.empty()) throw input_error("missing --module");
  if (opt.right_path.empty()) throw input_error("missing --right");
  const Module<F> m = module_from_json(f, load_json_file(opt.module_path), s.a);
  const Module<F> n = module_from_json(f, load_json_file(opt.right_path), s.b);
  const Thm36Report rep = theorem_3_6_check(s, m, n, opt.kmax);
  emit(thm36_to_json(rep), opt);
  if (!rep.hypotheses_ok) return 3;
  return rep.holds ? 0 : 1;
}

template <FieldLike F>
int verify_prop41(const F& f, const Options& opt) {
  const AlgebraPtr<F> a = load_algebra(f, opt);
  const Matrix<F> gens = load_ideal_gens(f, opt, a->dim());
  const SubalgebraR<F> r = load_subalgebra(f, opt, *a);
  const StratifyingReport rep =
      stratifying_check(a, gens, opt.kmax, std::optional<SubalgebraR<F>>(r));
  Json j = stratifying_to_json(rep);
  const bool hyp = rep.relative_stratifying.value_or(false) &&
                   rep.modules_projective_over_r.value_or(false) &&
                   rep.a_free_over_r.value_or(false);
  j["hypotheses_ok"] = hyp;
  if (!hyp) {
    emit(j, opt);
    return 3;
  }

  // conclusion: relative Tor against every quotient-module fixture vanishes
  const auto quot = quotient_by_ideal(*a, gens);
  const Matrix<F> ideal = ideal_closure(*a, gens);
  const auto op = share(opposite(*a));
  const Module<F> right = quotient_left_module(op, ideal);
  const auto quot_ptr = share(quot.quotient);
  std::vector<Module<F>> fixtures = {regular_module(quot_ptr)};
  if (radical_submodule(fixtures[0]).cols() > 0)
    fixtures.push_back(top_of(fixtures[0]));
  bool ok = true;
  Json tables = Json::array();
  for (const auto& mq : fixtures) {
    std::vector<Matrix<F>> infl;
    for (std::size_t i = 0; i < a->dim(); ++i)
      infl.push_back(mq.rho(col(quot.projection, i)));
    const Module<F> m_amb(a, std::move(infl));
    const TorTable t = relative_tor(right, m_amb, r, opt.kmax);
    tables.push_back(tor_to_json(t));
    for (std::size_t k = 1; k < t.dims.size(); ++k) ok = ok && t.dims[k] == 0;
  }
  j["module_tables"] = std::move(tables);
  j["holds"] = ok;
  emit(j, opt);
  return ok ? 0 : 1;
}

template <FieldLike F>
int verify_prop42(const F& f, const Options& opt) {
  const Loaded<F> left = load_primary(f, opt);
  const Loaded<F> right = load_right(f, opt);
  const TorTable ordinary = tor(right.mod, left.mod, opt.kmax);
  const TorTable relative = relative_tor(
      right.mod, left.mod, ground_field_subalgebra(*left.alg), opt.kmax);
  const bool ok = ordinary.dims == relative.dims;
  emit(Json{{"ordinary", tor_to_json(ordinary)},
            {"relative", tor_to_json(relative)},
            {"holds", ok}},
       opt);
  return ok ? 0 : 1;
}

template <FieldLike F>
int verify_thm43(const F& f, const Options& opt) {
  const AlgebraPtr<F> a = load_algebra(f, opt);
  const Matrix<F> gens = load_ideal_gens(f, opt, a->dim());
  if (opt.module_path.empty()) throw input_error("missing --module");
  const auto quot = quotient_by_ideal(*a, gens);
  const Module<F> m = module_from_json(f, load_json_file(opt.module_path),
                                       share(quot.quotient));
  const Thm43Report rep = theorem_4_3_check(a, gens, m, opt.kmax);
  emit(thm43_to_json(rep), opt);
  if (!rep.verdict_given) return 3;
  return rep.holds ? 0 : 1;
}

int verify_prop15(const Options& opt) {
  const CriterionResult res = criterion_2(opt.seed);
  emit(Json{{"holds", res.pass}, {"detail", res.witness}, {"seed", opt.seed}}, opt);
  return res.pass ? 0 : 1;
}

int cmd_corpus(const Options& opt) {
  if (opt.config_path.empty()) throw input_error("missing --config");
  const Json config = load_json_file(opt.config_path);
  return corpus_run(config, fs::path(opt.config_path).parent_path(), std::cout,
                    opt.seed);
}

// ---------------------------------------------------------------------------

int dispatch(const Options& opt) {
  if (opt.command == "corpus") return cmd_corpus(opt);
  if (opt.command == "verify" && opt.verify_target == "prop1.5")
    return verify_prop15(opt);

  const FieldSpec spec = field_of_primary(opt);
  return with_field(spec, [&](const auto& f) -> int {
    if (opt.command == "resolve") return cmd_resolve(f, opt);
    if (opt.command == "cover") return cmd_cover(f, opt);
    if (opt.command == "superfluous") return cmd_superfluous(f, opt);
    if (opt.command == "smash") return cmd_smash(f, opt);
    if (opt.command == "twist") return cmd_twist(f, opt);
    if (opt.command == "tor") return cmd_tor(f, opt, false);
    if (opt.command == "rtor") return cmd_tor(f, opt, true);
    if (opt.command == "bar") return cmd_bar(f, opt);
    if (opt.command == "stratify") return cmd_stratify(f, opt);
    if (opt.command == "verify") {
      if (opt.verify_target == "thm2.6") return verify_thm26(f, opt);
      if (opt.verify_target == "prop3.2") return verify_prop32(f, opt);
      if (opt.verify_target == "thm3.6") return verify_thm36(f, opt);
      if (opt.verify_target == "prop4.1") return verify_prop41(f, opt);
      if (opt.verify_target == "prop4.2") return verify_prop42(f, opt);
      if (opt.verify_target == "thm4.3") return verify_thm43(f, opt);
      throw input_error("unknown verify target: " + opt.verify_target);
    }
    throw input_error("unknown command: " + opt.command);
  });
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact graded resolutions, twisted products, and Tor"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--kmax", opt.kmax, "resolution length");
    sub->add_flag("--graded", opt.graded, "work with the grading");
    sub->add_option("--format", opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", opt.seed, "seed for randomized suites");
    sub->add_flag("--matrices", opt.with_matrices, "include matrices in text output");
    sub->add_option("--module", opt.module_path, "module file");
    sub->add_option("--algebra", opt.algebra_path, "algebra file");
    sub->add_option("--right", opt.right_path, "right module file");
    sub->add_option("--submodule", opt.submodule_path, "submodule generator file");
    sub->add_option("--ideal", opt.ideal_path, "ideal generator file");
    sub->add_option("--action", opt.action_path, "monoid action file");
    sub->add_option("--subalgebra", opt.subalgebra,
                    "'ground', 'vertices', or a subalgebra file");
    sub->add_option("--beta", opt.beta, "shift degree");
    sub->add_option("--config", opt.config_path, "corpus config file");
  };

  for (const char* name : {"resolve", "cover", "superfluous", "smash", "twist",
                           "tor", "rtor", "bar", "stratify", "corpus"})
    add_common(app.add_subcommand(name));
  CLI::App* verify = app.add_subcommand("verify");
  verify->add_option("target", opt.verify_target, "what to verify")
      ->required()
      ->check(CLI::IsMember({"thm2.6", "prop3.2", "thm3.6", "prop4.1", "prop4.2",
                             "thm4.3", "prop1.5"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  opt.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(opt);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
