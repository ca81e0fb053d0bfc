// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "qcorr/cli/state_io.hpp"
#include "qcorr/cli/sweep.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/states.hpp"

namespace qcorr::cli {
namespace {

struct GlobalOptions {
  std::uint64_t seed = 42;
  int restarts = 32;
  unsigned threads = 0;
  std::vector<std::string> tol_overrides;
};

Tolerances parse_tolerances(const std::vector<std::string>& overrides) {
  Tolerances tol;
  const std::map<std::string, double*> fields = {
      {"herm", &tol.herm}, {"eig", &tol.eig},         {"psd", &tol.psd},         {"prob", &tol.prob},
      {"faithful", &tol.faithful}, {"marg", &tol.marg}, {"eq_band", &tol.eq_band}, {"p_floor", &tol.p_floor},
      {"supp", &tol.supp}};
  for (const std::string& item : overrides) {
    const auto eq = item.find('=');
    const auto it = eq == std::string::npos ? fields.end() : fields.find(item.substr(0, eq));
    if (it == fields.end()) throw ValidationError("--tol expects name=value with a known tolerance name, got '" + item + "'");
    try {
      *it->second = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("--tol value is not a number: '" + item + "'");
    }
  }
  return tol;
}

OptimizerConfig optimizer_config(const GlobalOptions& g) {
  OptimizerConfig cfg;
  cfg.seed = g.seed;
  cfg.restarts = g.restarts;
  cfg.threads = g.threads;
  return cfg;
}

void print_kv(std::ostream& out, const char* key, double value) { out << key << '=' << format_real(value) << '\n'; }

int cmd_gen(const std::string& family_name, Index d, double param, const std::string& out_path, std::ostream& out) {
  const Family family = parse_family(family_name);
  const DensityMatrix theta = family_state(family, d, param);
  if (out_path == "-")
    write_state(out, theta.op());
  else
    write_state_file(out_path, theta.op());
  return kOk;
}

int cmd_analyze(const std::string& path, bool with_discord, const GlobalOptions& g, std::ostream& out) {
  const Tolerances tol = parse_tolerances(g.tol_overrides);
  const DensityMatrix theta = read_state_file(path, tol);
  const CorrelationReport r = correlation_report(theta, tol);
  out << "d_h=" << theta.dims().h << '\n' << "d_k=" << theta.dims().k << '\n';
  print_kv(out, "S_theta", r.s_theta);
  print_kv(out, "S_rho", r.s_rho);
  print_kv(out, "S_sigma", r.s_sigma);
  print_kv(out, "I", r.mutual);
  print_kv(out, "S_K_given_H", r.s_k_given_h);
  print_kv(out, "S_H_given_K", r.s_h_given_k);
  print_kv(out, "D", r.d);
  print_kv(out, "ppt_margin", r.ppt_margin);
  out << "ppt=" << (r.ppt ? "true" : "false") << '\n';
  if (with_discord) {
    const SymmetricDiscord sd = symmetric_discord(theta, optimizer_config(g), tol);
    print_kv(out, "D_H", sd.h.value);
    print_kv(out, "D_K", sd.k.value);
    print_kv(out, "D_sym", sd.value);
    out << "restarts=" << g.restarts << '\n' << "seed=" << g.seed << '\n';
  }
  return kOk;
}

int cmd_sweep(SweepOptions options, const std::string& out_path, const GlobalOptions& g, std::ostream& out) {
  options.optimizer = optimizer_config(g);
  options.threads = g.threads;
  options.tol = parse_tolerances(g.tol_overrides);
  std::ofstream file;
  if (out_path != "-") {
    file.open(out_path);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
  }
  const std::vector<SweepRecord> records = run_sweep(options);
  std::ostream& sink = out_path == "-" ? out : file;
  write_sweep_csv(sink, records, options.discord);
  if (!sink.flush()) throw IoError("failed writing sweep output");
  return kOk;
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const GlobalOptions& g, std::ostream& out) {
  const Tolerances tol = parse_tolerances(g.tol_overrides);
  const DensityMatrix a = read_state_file(path_a, tol);
  const DensityMatrix b = read_state_file(path_b, tol);
  const DComparison c = compare_d(a, b, tol);
  print_kv(out, "D_a", c.d_a);
  print_kv(out, "D_b", c.d_b);
  out << "ordering=" << to_string(c.ordering) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qcorr: entropic and discord correlations of bipartite quantum states"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Optimizer seed")->capture_default_str();
  app.add_option("--restarts", g.restarts, "Optimizer restarts per one-sided discord")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--tol", g.tol_overrides, "Tolerance override name=value (herm, eig, psd, prob, faithful, marg, eq_band, p_floor, supp)");

  std::string family;
  Index d = 3;
  double param = 0.0;
  std::string out_path = "-";
  auto* gen = app.add_subcommand("gen", "Write a family state as JSON");
  gen->add_option("--family", family, "horodecki or bell-eps")->required();
  gen->add_option("--d", d, "Local dimension")->capture_default_str();
  gen->add_option("--param", param, "alpha (horodecki) or epsilon (bell-eps)")->required();
  gen->add_option("--out", out_path, "Output path, - for stdout")->capture_default_str();

  std::string state_path;
  bool with_discord = false;
  auto* analyze = app.add_subcommand("analyze", "Report entropies, D-correlation, PPT margin and optional discord");
  analyze->add_option("state", state_path, "State file")->required();
  analyze->add_flag("--discord", with_discord, "Also compute D_H, D_K and D_sym");

  SweepOptions sweep_opts;
  std::string spacing = "linear";
  auto* sweep = app.add_subcommand("sweep", "Tabulate a family over a parameter grid as CSV");
  sweep->add_option("--family", family, "horodecki or bell-eps")->required();
  sweep->add_option("--d", sweep_opts.d, "Local dimension")->capture_default_str();
  sweep->add_option("--min", sweep_opts.param_min, "First grid value")->required();
  sweep->add_option("--max", sweep_opts.param_max, "Last grid value")->required();
  sweep->add_option("--steps", sweep_opts.steps, "Grid points")->required();
  sweep->add_option("--spacing", spacing, "linear or log")->check(CLI::IsMember({"linear", "log"}))->capture_default_str();
  sweep->add_flag("--discord", sweep_opts.discord, "Add symmetrized discord columns");
  sweep->add_option("--out", out_path, "CSV path, - for stdout")->capture_default_str();

  std::string path_a, path_b;
  auto* compare = app.add_subcommand("compare", "Order two states with equal marginals by D-correlation");
  compare->add_option("state_a", path_a, "First state file")->required();
  compare->add_option("state_b", path_b, "Second state file")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("qcorr");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  try {
    if (*gen) return cmd_gen(family, d, param, out_path, out);
    if (*analyze) return cmd_analyze(state_path, with_discord, g, out);
    if (*sweep) {
      sweep_opts.family = parse_family(family);
      sweep_opts.spacing = spacing == "log" ? Spacing::log : Spacing::linear;
      return cmd_sweep(sweep_opts, out_path, g, out);
    }
    if (*compare) return cmd_compare(path_a, path_b, g, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace qcorr::cli
