#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "twistprod/builtins.hpp"
#include "twistprod/curvature.hpp"
#include "twistprod/fractions.hpp"
#include "twistprod/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace twistprod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  double tol = kDefaultTol;
  std::uint64_t seed = 12345;
  std::string out;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--tol", opts.tol, "comparison tolerance");
  cmd->add_option("--seed", opts.seed, "seed for sampled checks");
  cmd->add_option("--out", opts.out, "write the report here instead of stdout");
  cmd->add_option("--format", opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

void emit(const CommonOpts& opts, const std::string& text, const json& j) {
  const std::string payload = opts.format == "json" ? j.dump(2) + "\n" : text;
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.out);
  if (!out) throw Error("cannot write " + opts.out);
  out << payload;
}

LieAlgebra load_algebra(const std::string& path) {
  return lie_algebra_from_json(load_json_file(path));
}

/// Group inputs name either a JSON file or a corpus group (z4, s3, q8, ...).
CayleyGroup resolve_group(const std::string& arg) {
  if (fs::exists(arg)) return cayley_group_from_json(load_json_file(arg));
  std::string upper = arg;
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& named : standard_corpus())
    if (named.name == upper) return named.group;
  throw ParseError("'" + arg + "' is neither a file nor a corpus group name");
}

std::string describe_nilpotency(const NilpotencyResult& r) {
  if (r.two_step) return "2-step nilpotent: yes";
  const auto& w = *r.witness;
  return "2-step nilpotent: no ([[e" + std::to_string(w[0] + 1) + ",e" + std::to_string(w[1] + 1) +
         "],e" + std::to_string(w[2] + 1) + "] != 0)";
}

json nilpotency_to_json(const NilpotencyResult& r) {
  json j{{"two_step_nilpotent", r.two_step}};
  if (r.witness) j["witness"] = {(*r.witness)[0] + 1, (*r.witness)[1] + 1, (*r.witness)[2] + 1};
  return j;
}

// --- reproduce -----------------------------------------------------------------

/// "- expected / + computed" rows for every line that differs.
std::string matrix_diff(const Eigen::MatrixXd& expected, const Eigen::MatrixXd& computed) {
  std::istringstream exp_lines(format_matrix(expected));
  std::istringstream got_lines(format_matrix(computed));
  std::string e, g, out;
  while (std::getline(exp_lines, e) && std::getline(got_lines, g)) {
    if (e == g) {
      out += "  " + e + "\n";
    } else {
      out += "- " + e + "\n+ " + g + "\n";
    }
  }
  return out;
}

struct Reproduction {
  bool pass = true;
  std::ostringstream text;
  json details = json::array();

  void record(const std::string& what, bool ok) {
    pass = pass && ok;
    text << (ok ? "  [ok] " : "  [FAIL] ") << what << "\n";
    details.push_back({{"check", what}, {"pass", ok}});
  }
};

void reproduce_bundle(Reproduction& rep, const std::string& name, double tol) {
  const BuiltinBundle b = builtin(name);
  rep.text << name << ": " << b.description << "\n";

  if (b.twist) {
    const LieAlgebra rebuilt = build_twisted_algebra(*b.twist, tol);
    bool same = rebuilt.dim() == b.algebra.dim();
    for (const auto& e : rebuilt.tensor().lower_entries())
      same = same && std::abs(e.value - b.algebra.tensor()(e.i, e.j, e.k)) <= 1e-12;
    rep.record("structure constants from the twist formulas", same);
  }
  {
    const auto got = b.algebra.tensor().lower_entries();
    bool same = got.size() == b.expected.constants.size();
    for (std::size_t t = 0; same && t < got.size(); ++t)
      same = got[t].i == b.expected.constants[t].i && got[t].j == b.expected.constants[t].j &&
             got[t].k == b.expected.constants[t].k &&
             std::abs(got[t].value - b.expected.constants[t].value) <= 1e-12;
    rep.record("nonzero constants match the reference list", same);
  }

  const Eigen::MatrixXd sectional = sectional_curvatures(b.algebra);
  rep.text << "sectional curvatures:\n" << format_matrix(sectional);
  if (b.expected.sectional) {
    const bool ok = (sectional - *b.expected.sectional).cwiseAbs().maxCoeff() <= 1e-12;
    rep.record("sectional curvature matrix", ok);
    if (!ok) rep.text << matrix_diff(*b.expected.sectional, sectional);
  }
  const double scalar = scalar_curvature(b.algebra);
  rep.text << "scalar curvature: " << format_value(scalar) << "\n";
  if (b.expected.scalar)
    rep.record("scalar curvature " + format_value(*b.expected.scalar),
               std::abs(scalar - *b.expected.scalar) <= 1e-12);
}

void reproduce_example1(Reproduction& rep, double tol, std::uint64_t seed) {
  rep.text << "example1: rotation-action twist of the motion group (sampled check)\n";
  const BuiltinBundle b = builtin("e2_star_e2_canonical");
  const SampledConditionReport ok = sampled_condition_check(*b.smooth_lambda, *b.smooth_mu, 500,
                                                            b.ker_lambda, b.ker_mu, seed, tol);
  rep.record("rotation actions satisfy the twist condition on 500 samples (max residual " +
                 format_value(ok.max_residual) + ")",
             ok.pass);

  const SmoothAction inner = inner_smooth_action(*b.group_g);
  const KernelResidual identity_only = [](const Eigen::VectorXd& g) {
    return std::hypot(std::remainder(g[0], 2.0 * M_PI), std::hypot(g[1], g[2]));
  };
  const SampledConditionReport bad =
      sampled_condition_check(inner, inner, 500, identity_only, identity_only, seed, tol);
  rep.record("inner actions violate it (max residual " + format_value(bad.max_residual) + ")",
             !bad.pass);
  rep.text << "  note: statistical evidence from sampling, not a proof\n";
}

void reproduce_example2(Reproduction& rep, double tol) {
  rep.text << "example2: Heisenberg bracket from the shear action\n";
  const BuiltinBundle b = builtin("heisenberg");
  const DerivedAction derived = derive_infinitesimal_action(*b.smooth_lambda, b.basis_h, b.basis_g);
  rep.record("finite-difference derivation converged (residual " +
                 format_value(derived.convergence_residual) + ")",
             derived.converged);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(2, 2);
  expected(1, 0) = 1.0;
  rep.record("derived operator maps (x1,x2) to (0, x1)",
             (derived.action.matrices[0] - expected).cwiseAbs().maxCoeff() <= 1e-6);
  reproduce_bundle(rep, "heisenberg", tol);
}

void reproduce_example3(Reproduction& rep, double tol) {
  reproduce_bundle(rep, "heisenberg", tol);
  reproduce_bundle(rep, "gamma_star_gamma", tol);
  const SixRhoReport six = verify_six_rho(builtin("heisenberg").algebra, tol);
  rep.record("scalar curvatures satisfy rho' = 6 rho (" + format_value(six.rho_prime) + " = 6 * " +
                 format_value(six.rho) + ")",
             six.pass);
}

void reproduce_example4(Reproduction& rep, double tol) {
  reproduce_bundle(rep, "e2_canonical", tol);
  reproduce_bundle(rep, "e2_star_e2_canonical", tol);
}

void reproduce_example5(Reproduction& rep, double tol) {
  reproduce_bundle(rep, "e2_skew", tol);
  reproduce_bundle(rep, "e2_star_e2_skew", tol);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted products of groups and Lie algebras, with left-invariant curvature"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env_tol = std::getenv("TWISTPROD_TOL")) {
    try {
      opts.tol = std::stod(env_tol);
    } catch (...) {
      std::cerr << "error: TWISTPROD_TOL is not a number\n";
      return kExitUsage;
    }
  }

  // twist-lie
  std::string spec_path;
  auto* twist_lie = app.add_subcommand("twist-lie", "build the twisted-product Lie algebra");
  twist_lie->add_option("spec", spec_path, "twist spec JSON")->required();
  add_common(twist_lie, opts);

  // inner-twist
  std::string algebra_path;
  auto* inner_twist_cmd =
      app.add_subcommand("inner-twist", "twist an algebra with itself by its adjoint actions");
  inner_twist_cmd->add_option("algebra", algebra_path, "Lie algebra JSON")->required();
  add_common(inner_twist_cmd, opts);

  // curvature
  std::string method = "full";
  auto* curvature_cmd =
      app.add_subcommand("curvature", "sectional and scalar curvature in the declared basis");
  curvature_cmd->add_option("algebra", algebra_path, "Lie algebra JSON")->required();
  curvature_cmd->add_option("--method", method, "full or metabelian")
      ->check(CLI::IsMember({"full", "metabelian"}));
  add_common(curvature_cmd, opts);

  // check-jacobi / check-nilpotent
  auto* jacobi_cmd = app.add_subcommand("check-jacobi", "Jacobi identity over all basis triples");
  jacobi_cmd->add_option("algebra", algebra_path, "Lie algebra JSON")->required();
  add_common(jacobi_cmd, opts);

  auto* nilpotent_cmd =
      app.add_subcommand("check-nilpotent", "check [[x,y],z] = 0 on all basis triples");
  nilpotent_cmd->add_option("algebra", algebra_path, "Lie algebra JSON")->required();
  add_common(nilpotent_cmd, opts);

  // fg-twist / fg-condition
  std::string g_arg, h_arg, lambda_path, mu_path;
  bool use_inner = false, use_trivial = false;
  const auto add_fg_inputs = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");  // frees --h for the second group
    cmd->add_option("--g", g_arg, "group JSON file or corpus name")->required();
    cmd->add_option("--h", h_arg, "second group (defaults to --g)");
    cmd->add_option("--lambda", lambda_path, "action of H on G, JSON");
    cmd->add_option("--mu", mu_path, "action of G on H, JSON");
    cmd->add_flag("--inner", use_inner, "use conjugation actions (needs G = H)");
    cmd->add_flag("--trivial", use_trivial, "use trivial actions");
    add_common(cmd, opts);
  };
  auto* fg_twist = app.add_subcommand("fg-twist", "twisted product of finite groups");
  add_fg_inputs(fg_twist);
  auto* fg_condition =
      app.add_subcommand("fg-condition", "check the group criterion for finite twists");
  add_fg_inputs(fg_condition);

  // derive-action
  std::string builtin_name;
  double step = 1e-4;
  auto* derive_cmd = app.add_subcommand(
      "derive-action", "differentiate a builtin smooth action into derivation matrices");
  derive_cmd->add_option("name", builtin_name, "builtin example name")->required();
  derive_cmd->add_option("--step", step, "finite-difference step");
  add_common(derive_cmd, opts);

  // verify-6rho
  auto* six_rho_cmd =
      app.add_subcommand("verify-6rho", "check rho' = 6 rho for the inner twist of an algebra");
  six_rho_cmd->add_option("algebra", algebra_path, "Lie algebra JSON")->required();
  add_common(six_rho_cmd, opts);

  // reproduce
  std::string example;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "rebuild a worked example and compare to golden values");
  reproduce_cmd
      ->add_option("example", example,
                   "example1..example5, a builtin bundle name, or 'all'")
      ->required();
  add_common(reproduce_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*twist_lie) {
      const fs::path path(spec_path);
      const TwistSpec spec = twist_spec_from_json(load_json_file(path), path.parent_path());
      const LieAlgebra alg = build_twisted_algebra(spec, opts.tol);
      const ValidationReport jacobi = check_jacobi(alg, opts.tol);
      std::ostringstream text;
      text << "built algebra of dimension " << alg.dim() << "\n"
           << lie_algebra_to_json(alg).dump(2) << "\n"
           << jacobi.summary() << "\n";
      json j{{"algebra", lie_algebra_to_json(alg)}, {"jacobi", validation_report_to_json(jacobi)}};
      emit(opts, text.str(), j);
      return jacobi.pass ? kExitPass : kExitCheckFailed;
    }

    if (*inner_twist_cmd) {
      const InnerTwistResult result = build_inner_twist(load_algebra(algebra_path), opts.tol);
      std::ostringstream text;
      if (!result.source_two_step_nilpotent)
        text << "warning: source is not 2-step nilpotent; no group realizes this algebra\n";
      text << lie_algebra_to_json(result.algebra).dump(2) << "\n";
      json j{{"algebra", lie_algebra_to_json(result.algebra)},
             {"source_two_step_nilpotent", result.source_two_step_nilpotent}};
      emit(opts, text.str(), j);
      return kExitPass;
    }

    if (*curvature_cmd) {
      const CurvatureReport report =
          curvature_report(load_algebra(algebra_path),
                           method == "full" ? CurvatureMethod::milnor_full
                                            : CurvatureMethod::metabelian_shortcut,
                           opts.tol);
      std::ostringstream text;
      text << "sectional curvatures:\n"
           << format_matrix(report.sectional) << "scalar curvature: "
           << format_value(report.scalar) << " (" << to_string(report.method) << ")\n";
      emit(opts, text.str(), curvature_report_to_json(report));
      return kExitPass;
    }

    if (*jacobi_cmd) {
      const ValidationReport report = check_jacobi(load_algebra(algebra_path), opts.tol);
      emit(opts, report.summary() + "\n", validation_report_to_json(report));
      return report.pass ? kExitPass : kExitCheckFailed;
    }

    if (*nilpotent_cmd) {
      const NilpotencyResult r = is_two_step_nilpotent(load_algebra(algebra_path), opts.tol);
      emit(opts, describe_nilpotency(r) + "\n", nilpotency_to_json(r));
      return r.two_step ? kExitPass : kExitCheckFailed;
    }

    if (*fg_twist || *fg_condition) {
      const CayleyGroup g = resolve_group(g_arg);
      const CayleyGroup h = h_arg.empty() ? g : resolve_group(h_arg);
      GroupAction lambda = trivial_action(h, g);
      GroupAction mu = trivial_action(g, h);
      if (use_inner) {
        if (g.table() != h.table())
          throw ParseError("--inner needs two copies of the same group");
        lambda = inner_action(g);
        mu = inner_action(g);
      } else if (!use_trivial) {
        if (lambda_path.empty() || mu_path.empty())
          throw ParseError("provide --lambda and --mu files, or --inner / --trivial");
        lambda = group_action_from_json(load_json_file(lambda_path), h, g);
        mu = group_action_from_json(load_json_file(mu_path), g, h);
        const GroupValidation vl = validate_action(lambda);
        if (!vl.pass) throw ParseError("lambda is not an action: " + vl.message());
        const GroupValidation vm = validate_action(mu);
        if (!vm.pass) throw ParseError("mu is not an action: " + vm.message());
      }

      if (*fg_condition) {
        const ConditionResult r = check_twist_condition(lambda, mu);
        std::ostringstream text;
        json j{{"holds", r.holds}};
        if (r.holds) {
          text << "twist condition: holds\n";
        } else {
          text << "twist condition: violated (clause " << r.failed_clause << ") at g="
               << g.label(r.witness->first) << ", h=" << h.label(r.witness->second) << "\n";
          j["failed_clause"] = r.failed_clause;
          j["witness"] = {r.witness->first, r.witness->second};
        }
        emit(opts, text.str(), j);
        return r.holds ? kExitPass : kExitCheckFailed;
      }

      const TwistOutcome outcome = twisted_product(g, h, lambda, mu);
      std::ostringstream text;
      json j{{"is_group", outcome.is_group},
             {"order", g.order() * h.order()},
             {"condition_holds", outcome.condition.holds}};
      if (outcome.is_group) {
        text << "twisted product is a group of order " << outcome.table->order() << "\n";
        j["table"] = cayley_group_to_json(*outcome.table);
      } else {
        text << "twisted product of order " << g.order() * h.order()
             << " is NOT a group: " << outcome.failure->message() << "\n";
        if (outcome.condition.witness)
          text << "condition witness: g=" << g.label(outcome.condition.witness->first)
               << ", h=" << h.label(outcome.condition.witness->second) << " (clause "
               << outcome.condition.failed_clause << ")\n";
        j["failure"] = {{"axiom", outcome.failure->axiom}, {"witness", outcome.failure->witness}};
      }
      emit(opts, text.str(), j);
      return outcome.is_group ? kExitPass : kExitCheckFailed;
    }

    if (*derive_cmd) {
      const BuiltinBundle b = builtin(builtin_name);
      if (!b.smooth_lambda) throw ParseError("builtin '" + builtin_name + "' has no smooth action");
      const std::vector<Eigen::VectorXd>& acting = b.basis_h.empty() ? b.basis_g : b.basis_h;
      const DerivedAction derived =
          derive_infinitesimal_action(*b.smooth_lambda, acting, b.basis_g, step);
      std::ostringstream text;
      text << "derived operator for '" << builtin_name << "' (step " << step << ")\n"
           << action_to_json(derived.action).dump(2) << "\n"
           << "step-halving residual: " << derived.convergence_residual
           << (derived.converged ? " (converged)" : " (NOT converged)") << "\n";
      json j{{"action", action_to_json(derived.action)},
             {"convergence_residual", derived.convergence_residual},
             {"richardson_constant", derived.richardson_constant},
             {"converged", derived.converged}};
      emit(opts, text.str(), j);
      return derived.converged ? kExitPass : kExitCheckFailed;
    }

    if (*six_rho_cmd) {
      const SixRhoReport report = verify_six_rho(load_algebra(algebra_path), opts.tol);
      std::ostringstream text;
      text << "rho = " << format_value(report.rho) << ", rho' = " << format_value(report.rho_prime)
           << (report.rho != 0.0 ? ", ratio " + format_value(report.ratio) : "") << " -> "
           << (report.pass ? "pass" : "FAIL") << "\n";
      emit(opts, text.str(), six_rho_report_to_json(report));
      return report.pass ? kExitPass : kExitCheckFailed;
    }

    if (*reproduce_cmd) {
      Reproduction rep;
      const auto run_one = [&](const std::string& name) {
        if (name == "example1") return reproduce_example1(rep, opts.tol, opts.seed);
        if (name == "example2") return reproduce_example2(rep, opts.tol);
        if (name == "example3") return reproduce_example3(rep, opts.tol);
        if (name == "example4") return reproduce_example4(rep, opts.tol);
        if (name == "example5") return reproduce_example5(rep, opts.tol);
        reproduce_bundle(rep, name, opts.tol);
      };
      if (example == "all") {
        for (const char* name : {"example1", "example2", "example3", "example4", "example5"})
          run_one(name);
      } else {
        run_one(example);
      }
      rep.text << (rep.pass ? "REPRODUCED" : "MISMATCH") << "\n";
      emit(opts, rep.text.str(), json{{"pass", rep.pass}, {"checks", rep.details}});
      return rep.pass ? kExitPass : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
