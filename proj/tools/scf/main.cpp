#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace scf::cli;

int main(int argc, char** argv) {
  CLI::App app{"Superconformal Verma modules: brackets, singular vectors, ranks"};
  app.require_subcommand(1);
  Options o;
  bool json = false;
  std::string format;

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "md"}));
  };
  auto weight = [&](CLI::App* sub, bool delta) {
    sub->add_option("--alg", o.alg, "n2, n3, n4 (or n4-, beta=-1), bign4")->required();
    if (delta) sub->add_option("--delta", o.delta, "Delta as p/q, or sym");
    sub->add_option("--lambda", o.lambda, "Lambda (J0 charge for n2)");
    sub->add_option("--lambda-bar", o.lambda_bar, "Lambda-bar (bign4, defaults to Lambda)");
  };

  auto* bracket = app.add_subcommand("bracket", "bracket of two generator modes, e.g. J:1 Gp:-1/2");
  bracket->add_option("--alg", o.alg)->required();
  bracket->add_option("modes", o.positional)->expected(2);
  common(bracket);

  auto* realize = app.add_subcommand("realize", "Grassmann realization of generator modes");
  realize->add_option("--alg", o.alg)->required();
  realize->add_option("modes", o.positional)->expected(1, 64);
  common(realize);

  auto* singular = app.add_subcommand("singular", "proper singular vectors of a Verma module");
  weight(singular, true);
  singular->add_option("--dpow", o.dpow, "largest d-power searched")->check(CLI::Range(0, 8));
  singular->add_option("--vector", o.vector, "check one named vector (a4, b15, Gp_v, ...)");
  common(singular);

  auto* locus = app.add_subcommand("locus", "values of Delta carrying singular vectors, Delta symbolic");
  weight(locus, false);
  locus->add_option("--dpow", o.dpow)->check(CLI::Range(0, 8));
  common(locus);

  auto* rank = app.add_subcommand("rank", "rank over C[d] of the irreducible quotient");
  weight(rank, true);
  common(rank);

  auto* row = app.add_subcommand("row", "full classification row");
  weight(row, true);
  common(row);

  auto* tables = app.add_subcommand("tables", "classification tables over the standard grid");
  tables->add_option("--out", o.out_dir, "write the table files into this directory");
  tables->add_option("--check", o.check_dir, "compare against the table files in this directory");
  tables->add_option("--jobs", o.jobs, "worker threads (default: hardware)")->check(CLI::Range(0, 256));
  common(tables);

  auto* axioms = app.add_subcommand("axioms", "conformal (super)algebra and module axiom checks");
  common(axioms);

  auto* verify = app.add_subcommand("verify-paper", "regression suite over every catalogued statement");
  verify->add_option("--suite", o.suite, "all, brackets, n2, n3, n4, bign4, lambda");
  verify->add_flag("--allow-known-misprints", o.allow_known_misprints,
                   "count a printed identity as passing when its catalogued correction holds");
  verify->add_option("--jobs", o.jobs, "worker threads (default: hardware)")->check(CLI::Range(0, 256));
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    o.cutoff2 = default_cutoff2();
    o.format = json || format == "json" ? Format::Json : format == "md" ? Format::Markdown : Format::Text;
    std::ostream& out = std::cout;
    if (*bracket) return cmd_bracket(o, out);
    if (*realize) return cmd_realize(o, out);
    if (*singular) return cmd_singular(o, out);
    if (*locus) return cmd_locus(o, out);
    if (*rank) return cmd_rank(o, out);
    if (*row) return cmd_row(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const scf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
