#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "gkern/cli.hpp"
#include "gkern/error.hpp"

namespace {

struct Flags {
  std::vector<std::string> families;
  std::vector<std::string> generators;
  std::optional<std::string> policy;
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> config;
  std::map<std::string, double> tolerances;
  bool corrupt = false;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--family", f.families, "named group family, e.g. cyclic:6 (repeatable)");
  cmd->add_option("--generators", f.generators, "group file: degree, then one [i0,...] per line");
  cmd->add_option("--policy", f.policy, "each-minimal | all-sums-up-to-k | full-space");
  cmd->add_option("--k", f.k, "largest number of parts in a sum");
  cmd->add_option("--seed", f.seed, "64-bit seed (required)");
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--config", f.config, "JSON config; flags override it");
  for (const auto& name : gkern::Tolerances::names()) {
    std::string dashed = name;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    cmd->add_option_function<double>(
        "--tol-" + dashed, [&f, name](double v) { f.tolerances[name] = v; },
        "override the " + name + " tolerance");
  }
  cmd->add_flag("--corrupt-projection", f.corrupt)->group("");
}

gkern::ExperimentConfig build_config(const Flags& f) {
  gkern::ExperimentConfig c;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw gkern::Error(gkern::ErrorCode::ParseError, "cannot read '" + *f.config + "'");
    gkern::Json j;
    try {
      j = gkern::Json::parse(in);
    } catch (const gkern::Json::exception& e) {
      throw gkern::Error(gkern::ErrorCode::ParseError, e.what());
    }
    c = gkern::config_from_json(j);
  }
  c.families.insert(c.families.end(), f.families.begin(), f.families.end());
  c.generator_files.insert(c.generator_files.end(), f.generators.begin(), f.generators.end());
  if (f.policy) c.selector.policy = gkern::parse_subspace_policy(*f.policy);
  if (f.k) c.selector.k = *f.k;
  if (f.seed) c.seed = *f.seed;
  if (f.out) c.output_dir = *f.out;
  for (const auto& [name, v] : f.tolerances) c.tolerances.set(name, v);
  c.corrupt_projection = f.corrupt;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reproducing kernels of finite group actions"};
  app.require_subcommand(1);
  Flags flags;
  auto* decompose = app.add_subcommand("decompose", "split C(X) into invariant subspaces");
  auto* verify = app.add_subcommand("verify", "check every kernel law per subspace");
  auto* conjectures = app.add_subcommand("conjectures", "run the conjecture probes");
  for (auto* cmd : {decompose, verify, conjectures}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  gkern::ExperimentConfig config;
  try {
    config = build_config(flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (decompose->parsed()) return gkern::cmd_decompose(config, std::cout, std::cerr);
  if (verify->parsed()) return gkern::cmd_verify(config, std::cout, std::cerr);
  return gkern::cmd_conjectures(config, std::cout, std::cerr);
}
