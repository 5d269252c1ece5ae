// metallic-geo: invariants and curvature inequalities of bi-slant submanifolds
// in locally metallic product space forms.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "mgeo_report/report.hpp"

namespace rep = mgeo::report;

namespace {

struct CaseArgs {
  std::string config;
  std::string example;
  std::string out;
  std::uint64_t seed = 42;
  int restarts = 64;
  double tol = 1e-7;
  std::string ineq;
  std::string tr2;
};

void add_case_options(CLI::App* cmd, CaseArgs& a, bool analysis) {
  auto* cfg = cmd->add_option("--config", a.config, "Case configuration (JSON)");
  auto* ex = cmd->add_option("--example", a.example, "Built-in case, see `examples`");
  cfg->excludes(ex);
  cmd->add_option("--out", a.out, "Write the report here instead of stdout");
  if (!analysis) return;
  cmd->add_option("--seed", a.seed, "Optimizer seed")->default_val(42);
  cmd->add_option("--restarts", a.restarts, "Optimizer restarts")->default_val(64);
  cmd->add_option("--tol", a.tol, "Falsification tolerance")->default_val(1e-7);
  cmd->add_option("--ineq", a.ineq, "Theorems: comma list or 'all'");
  cmd->add_option("--tr2", a.tr2, "tr^2 phi reading")
      ->check(CLI::IsMember({"outer", "trace-of-square"}));
}

mgeo::CaseConfig load_case(const CLI::App* cmd, const CaseArgs& a) {
  mgeo::CaseConfig cfg;
  if (!a.config.empty()) {
    cfg = rep::load_config(a.config);
  } else if (!a.example.empty()) {
    const auto* e = mgeo::find_example(a.example);
    if (!e) throw rep::ConfigError("--example: unknown case '" + a.example + "'");
    cfg = e->config;
  } else {
    throw rep::ConfigError("one of --config or --example is required");
  }
  rep::Overrides o;
  const auto given = [&](const char* name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--seed")) o.seed = a.seed;
  if (given("--restarts")) o.restarts = a.restarts;
  if (given("--tol")) o.tol = a.tol;
  if (!a.ineq.empty()) o.theorems = rep::parse_theorem_list(a.ineq);
  if (!a.tr2.empty()) {
    o.reading = a.tr2 == "outer" ? mgeo::Tr2Reading::outer : mgeo::Tr2Reading::trace_of_square;
  }
  rep::apply(o, cfg);
  return cfg;
}

int emit(const rep::Outcome& out, const std::string& path) {
  const std::string text = rep::render(out.report);
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << path << "\n";
      return rep::config_error;
    }
    f << text;
  }
  if (out.report.contains("summary")) {
    const auto& s = out.report["summary"];
    if (s.contains("falsification_count") && s["falsification_count"].get<std::size_t>() > 0) {
      std::cerr << s["falsification_count"].get<std::size_t>() << " falsification event(s)\n";
    }
  }
  return out.exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature invariants and inequalities of bi-slant submanifolds"};
  app.require_subcommand(1);

  CaseArgs inv, ver, der;
  std::string oracle_out, examples_out;
  rep::OracleOptions oracle;

  auto* c_inv = app.add_subcommand("invariants", "Per-point invariants over the grid");
  add_case_options(c_inv, inv, false);
  auto* c_ver = app.add_subcommand("verify", "Evaluate the inequalities over the grid");
  add_case_options(c_ver, ver, true);
  auto* c_der = app.add_subcommand("check-derivation",
                                   "Compare direct 2 tau with the closed-form assembly");
  add_case_options(c_der, der, false);
  auto* c_orc = app.add_subcommand("oracles", "Chen-lemma and DDVV randomized suites");
  c_orc->add_option("--seed", oracle.seed, "Seed")->default_val(42);
  c_orc->add_option("--chen-samples", oracle.chen_samples)->default_val(1'000'000);
  c_orc->add_option("--ddvv-samples", oracle.ddvv_samples)->default_val(100'000);
  c_orc->add_option("--out", oracle_out);
  auto* c_ex = app.add_subcommand("examples", "List the built-in cases");
  c_ex->add_option("--out", examples_out);

  CLI11_PARSE(app, argc, argv);

  try {
    const int threads = rep::worker_threads();
    if (*c_inv) return emit(rep::cmd_invariants(load_case(c_inv, inv), threads), inv.out);
    if (*c_ver) return emit(rep::cmd_verify(load_case(c_ver, ver), threads), ver.out);
    if (*c_der) return emit(rep::cmd_check_derivation(load_case(c_der, der), threads), der.out);
    if (*c_orc) return emit(rep::cmd_oracles(oracle), oracle_out);
    if (*c_ex) return emit(rep::cmd_examples(), examples_out);
  } catch (const rep::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::ArgumentError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::ClassificationError& e) {
    std::cerr << "classification error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::RealizationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return rep::config_error;
  } catch (const mgeo::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return rep::numerical_failure;
  }
  return rep::ok;
}
