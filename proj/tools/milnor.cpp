// milnor: signature tables and cross-checks from JSON input.

#include <iostream>

#include "CLI11.hpp"
#include "milnor/cli.hpp"

int main(int argc, char** argv) {
  using namespace milnor;
  CLI::App app{"Twisted Milnor signatures, signature jumps and Levine-Tristram profiles"};
  app.require_subcommand(1);

  cli::JobSpec job;
  std::vector<std::string> xi_text;
  std::string format = "csv";
  std::string flavor = "real";
  std::optional<int> grid;
  std::optional<double> tol;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("--input", job.input_path, "JSON input file ('-' for stdin)")->required();
    sub->add_option("--xi", xi_text, "root of unity N/k (repeatable)")->take_all();
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* sig = app.add_subcommand("signature", "Milnor signatures and the total signature");
  add_common(sig, true);
  sig->add_option("--grid", grid, "all primitive N/k with 3 <= N <= bound");
  sig->add_option("--float-tol", tol, "use the float backend with this zero tolerance");

  CLI::App* jumps = app.add_subcommand("jumps", "signature jumps of a linking form");
  add_common(jumps, true);
  jumps->add_option("--grid", grid, "all primitive N/k with 3 <= N <= bound");
  jumps->add_flag("--check-both-routes", job.check_both_routes, "evaluate devissage and pushforward where both apply");

  CLI::App* lt = app.add_subcommand("lt-profile", "Levine-Tristram profile of a Seifert matrix");
  add_common(lt, true);
  lt->add_option("--grid", grid, "all primitive N/k with 3 <= N <= bound (default 12)");

  CLI::App* cross = app.add_subcommand("crosscheck", "jump / Milnor signature and Blanchfield agreement report");
  add_common(cross, true);
  cross->add_option("--grid", grid, "all primitive N/k with 3 <= N <= bound");
  cross->add_flag("--check-both-routes", job.check_both_routes, "accepted for symmetry; crosscheck always does");

  CLI::App* elem = app.add_subcommand("elementary", "print the elementary generators at one point");
  add_common(elem, false);
  elem->add_option("--n", job.n, "exponent n >= 1");
  elem->add_option("--eps", job.eps, "+1 or -1");
  elem->add_option("--flavor", flavor, "real | complex")->check(CLI::IsMember({"real", "complex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInvalid;
  }

  try {
    job.command = cli::parse_command(app.get_subcommands().front()->get_name());
    job.format = cli::parse_format(format);
    job.flavor = parse_flavor(flavor);
    job.grid = grid;
    job.float_tol = tol;
    for (const auto& x : xi_text) job.xi_list.push_back(parse_root_spec(x));
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInvalid;
  }

  const cli::RunResult r = cli::run(job);
  std::cout << r.output;
  if (!r.error.empty()) std::cerr << r.error << '\n';
  return r.exit_code;
}
