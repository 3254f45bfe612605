#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "isoprod/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exceptional-sequence verification and search for surfaces isogenous to a higher product"};
  app.require_subcommand(1);

  isoprod::RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool wants_surface) {
    if (wants_surface) {
      sub->add_option("--preset", cfg.preset, "built-in surface: z2^3 | z2^4 | z3^2 | z5^2");
      sub->add_option("--surface", cfg.surface_file, "inline surface description file");
    }
    sub->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write the report to this path");
  };

  CLI::App* describe = app.add_subcommand("describe", "invariants, class groups, Picard and K-groups");
  add_common(describe, true);

  CLI::App* verify = app.add_subcommand("verify", "verify an exceptional sequence and its certificates");
  add_common(verify, true);
  verify->add_option("--collection", cfg.collection,
                     "members 'a,b,c,d[@w,..]' separated by ';' (default: the standard quadruple)");
  verify->add_option("--characters", cfg.characters, "trivial | all | 'w,..;w,..;...'");

  CLI::App* search = app.add_subcommand("search", "search a coefficient window for exceptional sequences");
  add_common(search, true);
  search->add_option("--window", cfg.window, "coefficient bound N, box [-N, N] (default 2)");
  search->add_option("--characters", cfg.characters, "trivial | all (sweep difference characters)");

  CLI::App* height = app.add_subcommand("height", "pseudoheight / height report for a collection");
  add_common(height, true);
  height->add_option("--collection", cfg.collection, "members as in verify");
  height->add_option("--characters", cfg.characters, "trivial | 'w,..;...'");

  CLI::App* nogo = app.add_subcommand("nogo", "non-existence proofs for pullback-sum shapes");
  add_common(nogo, true);
  nogo->add_option("--scan-bound", cfg.scan_bound, "bounded-scan radius (default 100 / 200)");

  CLI::App* phantom = app.add_subcommand("phantom-pair", "coprimality pairing of Picard torsion orders");
  add_common(phantom, false);
  phantom->add_option("torsion_a", cfg.phantom_a, "first torsion order")->required();
  phantom->add_option("torsion_b", cfg.phantom_b, "second torsion order")->required();

  CLI11_PARSE(app, argc, argv);
  cfg.command = app.get_subcommands().front()->get_name();

  isoprod::Report rep = isoprod::run_command(cfg);
  std::string body = cfg.format == "json" ? rep.to_json().dump(2) + "\n" : isoprod::render_text(rep);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    f << body;
  } else {
    std::cout << body;
  }
  return rep.exit_code;
}
