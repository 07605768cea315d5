#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wilson/error.hpp"

int main(int argc, char** argv) {
  using wilson::cli::OutputFormat;
  using wilson::cli::RunConfig;

  CLI::App app{"Products of all units in residue rings o/a of number fields"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string output = "text";
  try {
    cfg.cap = wilson::cli::default_cap();
  } catch (const wilson::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cap", cfg.cap, "enumeration cap for residue rings (env WILSON_CAP)");
  };
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.poly, "defining polynomial, \"x^2+1\" or \"1,0,1\"")->required();
  };
  auto add_ideal = [&](CLI::App* sub) {
    sub->add_option("--ideal", cfg.ideal, "factored ideal \"p^m[@i]; ...\"");
    sub->add_option("--gen", cfg.gen, "principal generator \"c0,c1,...\"");
  };

  auto* factor = app.add_subcommand("factor", "split a rational prime and check maximality");
  add_poly(factor);
  factor->add_option("--prime", cfg.prime, "rational prime")->required();
  add_common(factor);

  auto* classify = app.add_subcommand("classify", "closed-form product of all units");
  add_poly(classify);
  add_ideal(classify);
  add_common(classify);

  auto* verify = app.add_subcommand("verify", "closed form against brute-force enumeration");
  add_poly(verify);
  add_ideal(verify);
  verify->add_flag("--dump", cfg.dump, "include elements, units and census");
  add_common(verify);

  auto* sweep = app.add_subcommand("sweep", "verify every ideal up to a norm bound");
  add_poly(sweep);
  sweep->add_option("--max-norm", cfg.max_norm, "largest ideal norm")->check(CLI::PositiveNumber);
  add_common(sweep);

  auto* gauss = app.add_subcommand("gauss", "Gauss's rule for (Z/A)^x against enumeration");
  gauss->add_option("--max-A", cfg.max_A, "largest modulus")->check(CLI::PositiveNumber);
  add_common(gauss);

  auto* cyclo = app.add_subcommand("cyclo-demo", "2-power cyclotomic fields at the even prime");
  cyclo->add_option("--t", cfg.t, "field Q(zeta_{2^t}), 2 <= t <= 4")->check(CLI::Range(2, 4));
  cyclo->add_option("--n-max", cfg.n_max, "largest exponent n")->check(CLI::PositiveNumber);
  add_common(cyclo);

  CLI11_PARSE(app, argc, argv);

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;

  const auto result = wilson::cli::run(cfg);
  if (cfg.output == OutputFormat::Json) {
    std::cout << result.json.dump(2) << "\n";
  } else if (result.exit_code == 2) {
    std::cerr << result.text << result.json.dump() << "\n";
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
