#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rootharm/hyper.hpp"
#include "rootharm/satake.hpp"
#include "rootharm/shift.hpp"
#include "suites.hpp"

using namespace rootharm;
using namespace rootharm::cli;

namespace {

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + cfg.out);
  f << text;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.type, "root datum, e.g. A2, BC1, or A with --rank");
  sub->add_option("--rank", cfg.rank, "rank when --type is a bare letter");
  sub->add_option("--k", cfg.k, "multiplicity: symbolic, a value, or one value per orbit");
  sub->add_option("--q", cfg.q, "Hecke parameter: symbolic, a value, or one value per orbit");
  sub->add_option("--height", cfg.height, "truncation height");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  sub->add_option("--lambda", cfg.lambda, "rank one weights: a..b or a comma list");
}

int finish(const Report& r, const RunConfig& cfg) {
  emit(render_report(r, cfg.format), cfg);
  if (!r.pass) std::cerr << "FAIL " << r.relation << ": " << r.witness.dump() << "\n";
  return r.pass ? 0 : 1;
}

Report shift_solve(const RunConfig& cfg) {
  RootDatum rd = RootDatum::build(cfg.label().empty() ? "BC1" : cfg.label());
  Multiplicity k = Multiplicity::parse(rd, cfg.k.empty() ? "symbolic" : cfg.k);
  int h = cfg.height >= 0 ? cfg.height : 4;
  Report rep("S(k) T(xi,k) = T(xi,k+1) S(k)");
  try {
    ShiftOperator s = nonsymmetric_shift(k, h);
    rep.details["operator"] = s.to_json();
  } catch (const NonUnique& e) {
    rep.fail(Json{{"error", e.what()}, {"kernel_dimension", e.kernel_dimension}});
  } catch (const NoSolution& e) {
    rep.fail(Json{{"error", e.what()}});
  }
  return rep;
}

Report satake_eval(const RunConfig& cfg) {
  RootDatum rd = RootDatum::build(cfg.label().empty() ? "A1" : cfg.label());
  HeckeParam q = HeckeParam::parse(rd, cfg.q.empty() ? "symbolic" : cfg.q);
  Weight lambda;
  if (!cfg.lambda.empty()) {
    std::stringstream ss(cfg.lambda);
    std::string item;
    int j = 0;
    while (std::getline(ss, item, ',')) {
      if (j >= rd.rank()) throw ConfigError("--lambda has more entries than the rank");
      lambda.c[j++] = std::stoi(item);
    }
  }
  Report rep("Satake image and spherical value");
  rep.details["lambda"] = rd.weight_string(lambda);
  rep.details["q"] = q.to_string();
  try {
    rep.details["satake_image"] = satake_image(lambda, q).to_string(rd);
    rep.details["spherical_value"] = spherical_value(lambda, q).to_string(rd);
  } catch (const PoleCancellationFailure& e) {
    rep.fail(Json{{"error", e.what()}});
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dunkl operators, Jacobi polynomials and shift operators over exact arithmetic"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string suite, kind;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite,--suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  add_common(verify, cfg);

  auto* table = app.add_subcommand("table", "dump E, P, satake or cfun tables");
  table->add_option("kind", kind, "table kind")->required()->check(CLI::IsMember(table_kinds()));
  add_common(table, cfg);

  auto* list = app.add_subcommand("suites", "list the verification suites");

  auto* shift = app.add_subcommand("shift", "shift operators");
  auto* solve = shift->add_subcommand("solve", "solve for the nonsymmetric shift operator");
  add_common(solve, cfg);
  shift->require_subcommand(1);

  auto* satake = app.add_subcommand("satake", "Satake images");
  auto* seval = satake->add_subcommand("eval", "Satake image and spherical value at lambda");
  add_common(seval, cfg);
  satake->require_subcommand(1);

  double lam = 0, k1 = 0, k2 = 0, x = 0, lam_im = 0;
  auto* hyper = app.add_subcommand("hyper", "rank one hypergeometric function");
  auto* heval = hyper->add_subcommand("eval", "F(lambda,k;x) on BC1, k1 = k_{a/2}, k2 = k_a");
  heval->add_option("--lambda", lam, "spectral parameter on the coroot")->required();
  heval->add_option("--lambda-im", lam_im, "imaginary part of lambda");
  heval->add_option("--k1", k1, "multiplicity of the short root");
  heval->add_option("--k2", k2, "multiplicity of the long root")->required();
  heval->add_option("--x", x, "value of the short root")->required();
  heval->add_option("--out", cfg.out, "output file (default stdout)");
  hyper->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (const auto& n : suite_names()) std::cout << n << "\n";
      return 0;
    }
    if (*verify) {
      if (suite.empty()) throw ConfigError("verify needs a suite");
      return finish(run_suite(suite, cfg), cfg);
    }
    if (*table) {
      emit(render_table(make_table(kind, cfg), cfg.format), cfg);
      return 0;
    }
    if (*solve) {
      cfg.validate();
      return finish(shift_solve(cfg), cfg);
    }
    if (*seval) {
      cfg.validate();
      return finish(satake_eval(cfg), cfg);
    }
    if (*heval) {
      FValue f = rank1_F({Complex(lam, lam_im), k1, k2}, x);
      Json out{{"value", {f.value.real(), f.value.imag()}},
               {"est_error", f.est_error},
               {"argument_map_used", to_string(f.map)},
               {"method", f.method}};
      emit(out.dump(2) + "\n", cfg);
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
