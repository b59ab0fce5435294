#include <cstdint>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "cesaro/expansion.hpp"
#include "cesaro/fixtures.hpp"
#include "cesaro/harness.hpp"
#include "cesaro/io.hpp"
#include "cesaro/jsr.hpp"
#include "cesaro/linrep.hpp"
#include "cesaro/spectral.hpp"

namespace {

using namespace cesaro;

int error_exit(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::Admissibility: return 2;
    case ErrorKind::Envelope: return 3;
    default: return 1;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

int cmd_validate(const std::string& path) {
  AnyRep rep = load_rep(path);
  std::visit(
      [](const auto& r) {
        validate(r);
        std::cout << "radix: " << r.radix << "\n";
        std::cout << "dim: " << r.dim << "\n";
        std::cout << "insensitive: " << (is_insensitive(r) ? "true" : "false")
                  << "\n";
        auto q = r.Q();
        std::cout << "Q:\n";
        for (int i = 0; i < r.dim; ++i) {
          for (int j = 0; j < r.dim; ++j) {
            if (j) std::cout << " ";
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, RRep>)
              std::cout << rational_to_string(q(i, j));
            else
              std::cout << format_double(q(i, j).real()) << "+"
                        << format_double(q(i, j).imag()) << "i";
          }
          std::cout << "\n";
        }
      },
      rep);
  return 0;
}

int cmd_analyze(const std::string& path, const JsrOptions& jopts, double tol,
                const std::string& out_path) {
  AnyRep rep = load_rep(path);
  std::string report;
  std::visit(
      [&](const auto& r) {
        JsrEstimate est = jsr_estimate(r, jopts);
        auto es = eigen_structure(r.Q(), r.eigen_hints, tol);
        auto chains = jordan_basis(r.Q(), es, tol);
        auto dec = decompose_C(chains, r.C, tol);
        report = "{\"jsr\": " + jsr_to_json(est) +
                 ", \"spectral\": " + eigen_to_json(es, chains, dec) + "}\n";
      },
      rep);
  emit(report, out_path);
  return 0;
}

int cmd_expand(const std::string& path, const std::string& mode,
               const ExpansionOptions& opts, const std::string& out_path) {
  AnyRep rep = load_rep(path);
  std::string report;
  std::visit(
      [&](const auto& r) {
        if (mode == "words") {
          WordExpansion exp = lrtoae1(r, opts);
          report = word_expansion_to_json(exp);
          for (size_t i = 0; i < exp.grids.size(); ++i)
            if (!out_path.empty())
              write_file(out_path + ".grid" + std::to_string(i) + ".csv",
                         grid_to_csv(exp.grids[i]));
        } else {
          IntegerExpansion exp = lrtoae2(r, opts);
          report = expansion_to_json(exp);
          for (size_t i = 0; i < exp.base.grids.size(); ++i)
            if (!out_path.empty())
              write_file(out_path + ".grid" + std::to_string(i) + ".csv",
                         grid_to_csv(exp.base.grids[i]));
        }
      },
      rep);
  emit(report, out_path.empty() ? "" : out_path + ".json");
  if (out_path.empty()) std::cout << report;
  return 0;
}

int cmd_verify(const std::string& path, int64_t nmax,
               const ExpansionOptions& opts, const std::string& out_path) {
  AnyRep rep = load_rep(path);
  bool ok = false;
  std::string csv;
  std::visit(
      [&](const auto& r) {
        IntegerExpansion exp = lrtoae2(r, opts);
        ComparisonReport cmp =
            compare_integers(r, exp, r.radix, nmax);
        ok = cmp.envelope_ok;
        std::cout << "samples: " << cmp.Ns.size() << "\n";
        std::cout << "fitted_c: " << format_double(cmp.fitted_c) << "\n";
        std::cout << "worst_validation_ratio: "
                  << format_double(cmp.worst_validation_ratio) << "\n";
        std::cout << "envelope_ok: " << (ok ? "true" : "false") << "\n";
        // Empirical periodic scatter against the dominant modulus.
        double rho = 0.0;
        for (const ExpansionTerm& t : exp.base.terms)
          rho = std::max(rho, std::abs(t.eigenvalue));
        if (rho > 0) {
          PeriodicScatter sc =
              empirical_periodic(r, exp, rho, r.radix, nmax);
          csv = profile_to_csv(sc.t_frac, sc.values);
        }
      },
      rep);
  if (!csv.empty() && !out_path.empty()) write_file(out_path, csv);
  if (!ok)
    throw Error(ErrorKind::Envelope,
                "brute-force errors exceed the fitted envelope");
  return 0;
}

Rational generator_value(const std::string& name, int64_t n) {
  if (name == "popcount") {
    int c = 0;
    for (int64_t m = n; m; m &= m - 1) ++c;
    return Rational(c);
  }
  if (name == "constant") return Rational(1);
  if (name == "rudin-shapiro") {
    int pairs = 0;
    for (int64_t m = n; m; m >>= 1)
      if ((m & 3) == 3) ++pairs;
    return Rational(pairs % 2 == 0 ? 1 : -1);
  }
  throw Error(ErrorKind::Structural, "unknown generator: " + name);
}

int cmd_infer(const std::string& values_path, const std::string& generator,
              int radix, int64_t horizon, const std::string& out_path) {
  InferOptions opts;
  opts.check_horizon = horizon;
  RRep rep;
  if (!generator.empty()) {
    rep = infer_representation(
        radix, [&](int64_t n) { return generator_value(generator, n); }, opts);
    rep.name = generator;
  } else {
    std::string text = read_file(values_path);
    std::vector<Rational> values;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) values.push_back(parse_rational(tok));
    if (static_cast<int64_t>(values.size()) < horizon)
      opts.check_horizon = static_cast<int64_t>(values.size());
    rep = infer_representation(
        radix,
        [&](int64_t n) {
          if (n >= static_cast<int64_t>(values.size()))
            throw Error(ErrorKind::Budget, "value list exhausted");
          return values[static_cast<size_t>(n)];
        },
        opts);
  }
  std::string text = rep_to_json(AnyRep(rep));
  emit(text, out_path);
  std::cout << "dim: " << rep.dim << "\n";
  return 0;
}

int cmd_cascade(const std::string& path, int depth, int iters, double tol,
                const std::string& out_path) {
  AnyRep rep = load_rep(path);
  std::visit(
      [&](const auto& r) {
        JsrEstimate jsr = jsr_estimate(r);
        auto es = eigen_structure(r.Q(), r.eigen_hints, tol);
        auto chains = jordan_basis(r.Q(), es, tol);
        // Probe the chain of largest eigenvalue modulus.
        size_t best = 0;
        for (size_t i = 1; i < chains.size(); ++i)
          if (std::abs(chains[i].eigenvalue) > std::abs(chains[best].eigenvalue))
            best = i;
        if (chains.empty())
          throw Error(ErrorKind::Structural, "no Jordan chain found");
        DilationSystem sys = make_dilation_system(r, chains[best]);
        ConvergenceProbe probe =
            probe_fk_convergence(sys, jsr.upper, depth, iters);
        std::cout << "eigenvalue_modulus: "
                  << format_double(std::abs(chains[best].eigenvalue)) << "\n";
        std::cout << "mean_ratio: " << format_double(probe.mean_ratio) << "\n";
        for (double d : probe.sup_diffs)
          std::cout << "sup_diff: " << format_double(d) << "\n";
        if (!out_path.empty()) write_file(out_path, grid_to_csv(probe.grid));
      },
      rep);
  return 0;
}

int cmd_jsr(const std::string& path, const JsrOptions& jopts,
            const std::string& out_path) {
  AnyRep rep = load_rep(path);
  std::string report;
  std::visit([&](const auto& r) { report = jsr_to_json(jsr_estimate(r, jopts)); },
             rep);
  emit(report, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of radix-rational sequences"};
  app.require_subcommand(1);

  std::string path, out_path, mode = "integers", generator, norm = "one";
  double tol = kDefaultTol;
  int depth = -1, iters = 20, T = 4, radix = 2;
  int64_t nmax = 1 << 16, seed = 0, horizon = 1024;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "numeric tolerance");
    cmd->add_option("--out", out_path, "output path");
    cmd->add_option("--seed", seed, "deterministic seed");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a rep file");
  validate_cmd->add_option("path", path)->required();

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "jsr + spectral analysis");
  analyze_cmd->add_option("path", path)->required();
  add_common(analyze_cmd);

  CLI::App* expand_cmd = app.add_subcommand("expand", "asymptotic expansion");
  expand_cmd->add_option("path", path)->required();
  expand_cmd->add_option("--mode", mode, "words|integers")
      ->check(CLI::IsMember({"words", "integers"}));
  expand_cmd->add_option("--depth", depth, "grid depth");
  add_common(expand_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "brute-force check");
  verify_cmd->add_option("path", path)->required();
  verify_cmd->add_option("--nmax", nmax, "largest index");
  verify_cmd->add_option("--depth", depth, "grid depth");
  add_common(verify_cmd);

  CLI::App* infer_cmd = app.add_subcommand("infer", "guess a representation");
  infer_cmd->add_option("path", path, "whitespace-separated values file");
  infer_cmd->add_option("--generator", generator,
                        "popcount|constant|rudin-shapiro");
  infer_cmd->add_option("--radix", radix, "radix");
  infer_cmd->add_option("--horizon", horizon, "verification horizon");
  add_common(infer_cmd);

  CLI::App* cascade_cmd = app.add_subcommand("cascade", "cascade convergence");
  cascade_cmd->add_option("path", path)->required();
  cascade_cmd->add_option("--depth", depth, "grid depth")->required();
  cascade_cmd->add_option("--iters", iters, "iterations");
  add_common(cascade_cmd);

  CLI::App* jsr_cmd = app.add_subcommand("jsr", "joint spectral radius");
  jsr_cmd->add_option("path", path)->required();
  jsr_cmd->add_option("--T", T, "max word length");
  jsr_cmd->add_option("--norm", norm, "one|inf|two")
      ->check(CLI::IsMember({"one", "inf", "two"}));
  add_common(jsr_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    JsrOptions jopts;
    jopts.T_max = T;
    jopts.tol = tol;
    if (app.got_subcommand(jsr_cmd)) {
      jopts.norms = norm == "one"   ? std::vector<NormKind>{NormKind::One}
                    : norm == "inf" ? std::vector<NormKind>{NormKind::Inf}
                                    : std::vector<NormKind>{NormKind::Two};
    }
    ExpansionOptions eopts;
    eopts.tol = tol;
    eopts.grid_depth = depth;
    eopts.jsr = jopts;

    if (app.got_subcommand(validate_cmd)) return cmd_validate(path);
    if (app.got_subcommand(analyze_cmd))
      return cmd_analyze(path, jopts, tol, out_path);
    if (app.got_subcommand(expand_cmd))
      return cmd_expand(path, mode, eopts, out_path);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(path, nmax, eopts, out_path);
    if (app.got_subcommand(infer_cmd))
      return cmd_infer(path, generator, radix, horizon, out_path);
    if (app.got_subcommand(cascade_cmd))
      return cmd_cascade(path, depth, iters, tol, out_path);
    if (app.got_subcommand(jsr_cmd)) return cmd_jsr(path, jopts, out_path);
  } catch (const Error& e) {
    return error_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
