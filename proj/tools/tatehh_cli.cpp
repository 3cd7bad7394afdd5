// tatehh: dimension tables and verification suites for Tate-Hochschild
// (co)homology of quantum complete intersections.
//
// Exit codes: 0 success, 1 mismatch, 2 usage or validation, 3 resource budget.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tatehh/cli_reports.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/hochschild.hpp"
#include "tatehh/near_zero.hpp"
#include "tatehh/tate_engine.hpp"

namespace {

using namespace tatehh;

struct RunConfig {
  std::string spec_path;
  int n_min = -4;
  int n_max = 4;
  std::string variant = "homology";
  std::string coeff = "regular";
  std::string method = "auto";
  std::string out = "-";
  std::string format = "csv";
  std::size_t budget = kDefaultBarBudget;
  std::string dump_dir;
  bool cross = false;
  std::vector<std::string> suites;
  int max_degree = 3;
  std::uint64_t seed = VerifyOptions{}.seed;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out, or stdout for "-".
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw UsageError("cannot write " + cfg.out);
  os << text;
}

std::string render(const RunConfig& cfg, const DimensionTable& table) {
  if (cfg.format == "json") return to_json(table) + "\n";
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

Bimodule coefficient_bimodule(const QciAlgebra& a, const Coefficient& c) {
  return twisted_bimodule(a, nakayama(a, c.nu_power), DiagonalTwist::identity(a.field(), a.generators()));
}

int run_dims(const RunConfig& cfg) {
  if (cfg.n_min > cfg.n_max) throw UsageError("--min must not exceed --max");
  TateRequest req{parse_spec(slurp(cfg.spec_path)).spec,
                  cfg.n_min,
                  cfg.n_max,
                  parse_direction(cfg.variant),
                  Coefficient::parse(cfg.coeff),
                  parse_policy(cfg.method),
                  cfg.budget,
                  std::nullopt};
  if (!cfg.dump_dir.empty()) req.dump_dir = cfg.dump_dir;
  if (!cfg.cross) {
    const auto table = tate_dims(req);
    emit(cfg, render(cfg, table));
    for (const auto& e : table.entries) {
      if (!e.dimension) return exit_resource;
    }
    return exit_ok;
  }
  const auto report = cross_validate(req);
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& d : report.degrees) {
    nlohmann::ordered_json attempts = nlohmann::ordered_json::array();
    for (const auto& a : d.attempts) {
      attempts.push_back({{"policy", to_string(a.policy)},
                          {"dimension", a.entry.dimension ? nlohmann::ordered_json(*a.entry.dimension) : nlohmann::ordered_json(nullptr)},
                          {"method", to_string(a.entry.method)},
                          {"source", a.entry.source}});
    }
    doc.push_back({{"degree", d.degree}, {"agree", d.agree}, {"attempts", attempts}});
  }
  nlohmann::ordered_json out{{"degrees", doc}, {"dumps", nlohmann::ordered_json::array()}};
  if (!report.all_agree()) {
    for (const auto& p : report.dumps) out["dumps"].push_back(p.string());
  }
  emit(cfg, out.dump(2) + "\n");
  return report.all_agree() ? exit_ok : exit_mismatch;
}

int run_oracle(const RunConfig& cfg) {
  const QciAlgebra algebra(parse_spec(slurp(cfg.spec_path)).spec);
  const Direction d = parse_direction(cfg.variant);
  const Coefficient coeff = Coefficient::parse(cfg.coeff);
  BarWindowRequest req{algebra, coefficient_bimodule(algebra, coeff), cfg.max_degree, d, cfg.budget};
  if (!cfg.dump_dir.empty()) req.dump_dir = cfg.dump_dir;
  const auto dims = d == Direction::homology ? hh_homology_dims(req) : hh_cohomology_dims(req);
  DimensionTable table;
  for (int n = 0; n <= cfg.max_degree; ++n) {
    table.entries.push_back({n, dims[static_cast<std::size_t>(n)], Method::oracle,
                             to_string(d) + "/" + std::to_string(n) + "/nu:" + std::to_string(coeff.nu_power) + "/oracle"});
  }
  emit(cfg, render(cfg, table));
  return exit_ok;
}

int run_exactness(const RunConfig& cfg) {
  const QciAlgebra algebra(parse_spec(slurp(cfg.spec_path)).spec);
  const auto rep = exactness_report(algebra);
  VerifyReport report;
  report.checks.push_back({"(1 (x) x_t - x_t (x) 1) s = 0", rep.annihilated ? "0" : "nonzero", "0",
                           rep.annihilated ? Check::Status::pass : Check::Status::mismatch});
  report.checks.push_back({"rank of the copies (x^j (x) 1) s", std::to_string(rep.independent_rank),
                           std::to_string(rep.expected_rank),
                           rep.independent_rank == rep.expected_rank ? Check::Status::pass : Check::Status::mismatch});
  emit(cfg, report_to_json(report) + "\n");
  return report.exit_code();
}

int run_verify_cmd(const RunConfig& cfg) {
  std::vector<Suite> suites;
  if (cfg.suites.empty() || (cfg.suites.size() == 1 && cfg.suites[0] == "all")) {
    suites = all_suites();
  } else {
    for (const auto& s : cfg.suites) suites.push_back(parse_suite(s));
  }
  VerifyOptions opt;
  opt.max_degree = cfg.max_degree;
  opt.bar_budget = cfg.budget;
  opt.seed = cfg.seed;
  VerifyReport all;
  for (auto s : suites) {
    const auto rep = run_verify(s, opt);
    std::size_t failed = 0;
    for (const auto& c : rep.checks) failed += c.pass() ? 0 : 1;
    std::cerr << to_string(s) << ": " << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
    all.append(rep);
  }
  emit(cfg, report_to_json(all) + "\n");
  return all.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tate-Hochschild dimensions of quantum complete intersections"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", cfg.spec_path, "algebra spec (JSON)")->required()->check(CLI::ExistingFile); };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output path, - for stdout");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "bar complex basis budget")->check(CLI::PositiveNumber);
  };

  auto* dims = app.add_subcommand("dims", "Tate (co)homology dimension table");
  add_spec(dims);
  dims->add_option("--min", cfg.n_min, "lowest degree");
  dims->add_option("--max", cfg.n_max, "highest degree");
  dims->add_option("--variant", cfg.variant, "homology or cohomology")->check(CLI::IsMember({"homology", "cohomology"}));
  dims->add_option("--coeff", cfg.coeff, "regular or nu:K");
  dims->add_option("--method", cfg.method, "auto, bar, complex or formula")->check(CLI::IsMember({"auto", "bar", "complex", "formula"}));
  dims->add_option("--dump", cfg.dump_dir, "directory for bar differential dumps");
  dims->add_flag("--cross-validate", cfg.cross, "compare formula, bar and complex routes");
  add_out(dims);
  add_budget(dims);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suites, "ci, exterior, codim2, duality, exactness or all");
  verify->add_option("--max", cfg.max_degree, "maximum degree")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "seed of the randomized families");
  verify->add_option("--out", cfg.out, "output path, - for stdout");
  add_budget(verify);

  auto* oracle = app.add_subcommand("oracle", "ordinary Hochschild dimensions from the bar complex");
  add_spec(oracle);
  oracle->add_option("--max", cfg.max_degree, "maximum degree")->check(CLI::NonNegativeNumber);
  oracle->add_option("--variant", cfg.variant, "homology or cohomology")->check(CLI::IsMember({"homology", "cohomology"}));
  oracle->add_option("--coeff", cfg.coeff, "regular or nu:K");
  oracle->add_option("--dump", cfg.dump_dir, "directory for differential dumps");
  add_out(oracle);
  add_budget(oracle);

  auto* exact = app.add_subcommand("exactness", "check the element s against the map f");
  add_spec(exact);
  exact->add_option("--out", cfg.out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*dims) return run_dims(cfg);
    if (*verify) return run_verify_cmd(cfg);
    if (*oracle) return run_oracle(cfg);
    if (*exact) return run_exactness(cfg);
  } catch (const ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
