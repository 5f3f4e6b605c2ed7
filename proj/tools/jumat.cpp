// jumat: exact factorization of J-unitary polynomial matrices.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jumat/commands.hpp"
#include "jumat/errors.hpp"

using namespace jumat;

namespace {

std::vector<Json> read_inputs(const std::vector<std::string>& files) {
  std::vector<Json> docs;
  const auto take = [&docs](std::istream& in) {
    for (auto& d : read_documents(in)) docs.push_back(std::move(d));
  };
  if (files.empty()) take(std::cin);
  for (const auto& f : files) {
    if (f == "-") {
      take(std::cin);
      continue;
    }
    std::ifstream in(f);
    if (!in) throw ParseError("cannot open '" + f + "'");
    take(in);
  }
  return docs;
}

int finish(const CommandResult& r) {
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorization of J-unitary polynomial matrices"};
  app.require_subcommand(1);

  std::string mode_text, var_text;
  CommandOptions opt;
  opt.seed = default_seed();
  bool no_verify = false;
  std::size_t max_degree = 0;

  app.add_option("--mode", mode_text, "complex, real_omega or real_lambda")
      ->check(CLI::IsMember({"complex", "real_omega", "real_lambda"}));
  app.add_option("--var", var_text, "output variable: omega or lambda")
      ->check(CLI::IsMember({"omega", "lambda"}));
  app.add_option("--seed", opt.seed, "random seed (default $JUMAT_SEED or 1)");
  app.add_option("--jobs", opt.jobs, "documents processed in parallel")
      ->check(CLI::PositiveNumber);
  auto* max_degree_opt = app.add_option(
      "--max-degree", max_degree,
      "factor: largest accepted degree; rand: phase and tangent degree");
  app.add_flag("--trace", opt.trace, "factor: emit the reduction steps");
  app.add_flag("--no-verify", no_verify, "factor: skip the reconstruction check");
  app.add_flag("--normalized", opt.normalized, "check: also require U(0) = I");
  app.fallthrough();

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "membership report, exit 1 when not a member");
  check->add_option("files", files, "documents (default stdin)");
  auto* factor = app.add_subcommand("factor", "reduced word and constant tail");
  factor->add_option("files", files, "documents (default stdin)");
  auto* mul = app.add_subcommand("mul", "product of the documents in order");
  mul->add_option("files", files, "documents (default stdin)");
  auto* inv = app.add_subcommand("inv", "inverse of each document");
  inv->add_option("files", files, "documents (default stdin)");

  GenSpec gen_spec;
  auto* gen = app.add_subcommand("gen", "generator from explicit parameters");
  gen->add_option("--z", gen_spec.z, "direction, e.g. 1,1,0")->required();
  gen->add_option("--phi", gen_spec.phi, "phase coefficients for powers 1, 2, ...");
  gen->add_option("--g", gen_spec.g, "tangent vectors per power, ';' separated");
  gen->add_flag("--word", gen_spec.as_word, "emit a word document");

  RandSpec rand_spec;
  std::size_t factors = 0;
  auto* rand = app.add_subcommand("rand", "seeded random word");
  rand->add_option("--nu", rand_spec.nu, "matrix size")->check(CLI::Range(2, 64));
  auto* factors_opt = rand->add_option("--factors", factors, "exact number of factors");
  rand->add_option("--max-factors", rand_spec.max_factors, "largest number of factors");
  rand->add_option("--height", rand_spec.height, "coefficient height bound");
  rand->add_flag("--matrix", rand_spec.as_matrix, "emit the expanded matrix");

  std::string w_file;
  auto* conj = app.add_subcommand("conj", "conjugate by W = diag{1, L}");
  conj->add_option("w", w_file, "constant matrix document for W")->required();
  conj->add_option("files", files, "documents (default stdin)");

  auto* selftest = app.add_subcommand("selftest", "round-trip sweep over every mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (!mode_text.empty()) opt.mode = parse_mode(mode_text);
    if (!var_text.empty()) opt.var = parse_var(var_text);
    opt.verify = !no_verify;
    if (*max_degree_opt) opt.max_degree = max_degree;
    if (*factors_opt) rand_spec.factors = factors;

    if (*check) return finish(cmd_check(read_inputs(files), opt));
    if (*factor) return finish(cmd_factor(read_inputs(files), opt));
    if (*mul) return finish(cmd_mul(read_inputs(files), opt));
    if (*inv) return finish(cmd_inv(read_inputs(files), opt));
    if (*gen) return finish(cmd_gen(gen_spec, opt));
    if (*rand) return finish(cmd_rand(rand_spec, opt));
    if (*conj) {
      const auto w = read_inputs({w_file});
      if (w.size() != 1) throw ParseError("W file must hold one document");
      return finish(cmd_conj(w.front(), read_inputs(files), opt));
    }
    if (*selftest) return finish(cmd_selftest(opt));
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
