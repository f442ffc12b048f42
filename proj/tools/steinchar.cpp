// steinchar: batch front end for the exact Stein / character-ratio library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "stein/error.hpp"

namespace {

using steinchar::RunConfig;

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--structure", c.structure, "symmetric | hypercube | matchings | spin | hamming | scheme-file");
  sub->add_option("--n", c.n, "size n");
  sub->add_option("--d", c.d, "Hamming length d");
  sub->add_option("--q", c.q, "Hamming alphabet q");
  sub->add_option("--i", c.i, "class (i,1^{n-i}); for spin mu=(2i+1,1^{n-2i-1})");
  sub->add_option("--u", c.u, "hypercube generator coset");
  sub->add_option("--s", c.s, "scheme generator class");
  sub->add_option("--t", c.t, "hypercube / scheme chain parameter");
  sub->add_option("--tau", c.tau, "chain partition, e.g. 4,1");
  sub->add_option("--mu", c.mu, "class / coset partition, e.g. 3,1,1");
  sub->add_option("--file", c.file, "scheme-file JSON {\"relations\": [...]}");
  sub->add_option("--format", c.format, "json | csv");
  sub->add_option("--out", c.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Stein bounds for character ratios, spherical functions and association schemes"};
  app.require_subcommand(1);
  RunConfig cfg;
  using Cmd = int (*)(const RunConfig&, std::ostream&);
  Cmd chosen = nullptr;

  auto* spectrum = app.add_subcommand("spectrum", "exact law of W as (value, probability) atoms");
  auto* walk = app.add_subcommand("walk", "m-step walk coefficients p_m");
  auto* audit = app.add_subcommand("audit", "chain audit: rows, balance, linearity");
  auto* bound = app.add_subcommand("bound", "assembled Stein bound and Kolmogorov distance");
  auto* sweep = app.add_subcommand("sweep", "bound table over an n range");
  auto* verify = app.add_subcommand("verify", "exact identity suites");
  for (auto* sub : {spectrum, walk, audit, bound, sweep, verify}) add_common(sub, cfg);
  walk->add_option("--m", cfg.m, "number of steps");
  walk->add_flag("--bruteforce", cfg.bruteforce, "enumerate the walk instead of the spectral sum");
  bound->add_option("--variant", cfg.variant, "bound variant");
  sweep->add_option("--variant", cfg.variant, "limgroup | CLTgel | projerror | hypbound1 | hypbound2 | hamming");
  sweep->add_option("--n-range", cfg.n_range, "lo:hi");
  verify->add_option("--suite", cfg.suite, "orthogonality | chains | moments | walks | bounds | all");

  spectrum->callback([&] { chosen = steinchar::cmd_spectrum; });
  walk->callback([&] { chosen = steinchar::cmd_walk; });
  audit->callback([&] { chosen = steinchar::cmd_audit; });
  bound->callback([&] { chosen = steinchar::cmd_bound; });
  sweep->callback([&] { chosen = steinchar::cmd_sweep; });
  verify->callback([&] { chosen = steinchar::cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;  // help is 0, bad flags are validation errors
  }

  try {
    // build the whole report before touching --out: a failed run leaves no partial file
    std::ostringstream buf;
    int code = chosen(cfg, buf);
    if (cfg.out) {
      std::ofstream f(*cfg.out, std::ios::binary);
      if (!f) throw stein::ValidationError("cannot write '" + *cfg.out + "'");
      f << buf.str();
    } else {
      std::cout << buf.str();
    }
    return code;
  } catch (const stein::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const stein::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const stein::CapabilityError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  }
}
