// Command-line front end: reads a problem config, runs the requested
// pipeline stage, and writes CSV / JSON artifacts under --out.
//
// Exit codes: 0 success (basis for basis-check), 1 config error,
// 2 computation error, 3 not_basis, 4 borderline.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "slbasis/config.hpp"
#include "slbasis/errors.hpp"
#include "slbasis/reduced.hpp"
#include "slbasis/riesz.hpp"
#include "slbasis/spectrum.hpp"

namespace {

using slb::Verdict;

class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, const std::string& header) {
    file_ = std::fopen(path.string().c_str(), "w");
    if (!file_) throw slb::ConfigError("cli: cannot open output file " + path.string());
    std::fprintf(file_, "%s\n", header.c_str());
  }
  ~CsvWriter() {
    if (file_) std::fclose(file_);
  }
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void field(int v) { sep(); std::fprintf(file_, "%d", v); }
  void field(double v) { sep(); std::fprintf(file_, "%.12e", v); }
  void field(const std::string& v) { sep(); std::fprintf(file_, "%s", v.c_str()); }
  void endrow() {
    std::fprintf(file_, "\n");
    first_ = true;
  }

private:
  void sep() {
    if (!first_) std::fprintf(file_, ",");
    first_ = false;
  }
  std::FILE* file_ = nullptr;
  bool first_ = true;
};

slb::ThetaSet theta_from(const slb::Config& cfg) {
  if (!cfg.theta) throw slb::ConfigError("cli: this command needs a theta index list");
  return slb::ThetaSet(*cfg.theta);
}

int run_spectrum(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  std::string header = "n,lambda,beta,psi0,psiPi";
  for (int k = 0; k < p.boundary_dim(); ++k) header += ",psi_hat_" + std::to_string(k + 1);
  CsvWriter csv(out / "spectrum.csv", header);
  for (const slb::EigenPair& pair : sp.pairs) {
    csv.field(pair.n);
    csv.field(pair.lambda);
    csv.field(pair.beta);
    csv.field(pair.psi.front().u);
    csv.field(pair.psi.back().u);
    for (double g : pair.psi_hat) csv.field(g);
    csv.endrow();
  }
  return 0;
}

int run_basis_check(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const slb::ThetaSet theta(cfg.theta ? *cfg.theta : std::vector<int>{});
  if (theta.size() != p.boundary_dim())
    throw slb::ConfigError("cli: theta must contain exactly N = " +
                           std::to_string(p.boundary_dim()) + " indices");
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  const std::vector<int> sizes = cfg.sizes ? *cfg.sizes : std::vector<int>{10, 20, 40};
  slb::RieszReport rep = slb::make_report(p, sp, theta, sizes);
  const slb::CrossCheck cc = slb::cross_validate(p, sp, theta);
  if (cc.applicable) rep.reduced_agrees = cc.agree;

  nlohmann::json j;
  j["verdict"] = slb::to_string(rep.verdict);
  j["det"] = rep.det;
  j["singular_values"] = rep.singular_values;
  j["gram_consistent"] = rep.gram_consistent;
  nlohmann::json gj = nlohmann::json::array();
  for (const slb::GramEntry& g : rep.gram)
    gj.push_back({{"size", g.size}, {"min_eig", g.min_eig}, {"max_eig", g.max_eig}});
  j["gram_sections"] = gj;
  if (rep.reduced_agrees) j["reduced_agrees"] = *rep.reduced_agrees;

  std::FILE* f = std::fopen((out / "riesz_report.json").string().c_str(), "w");
  if (!f) throw slb::ConfigError("cli: cannot open report file");
  std::fprintf(f, "%s\n", j.dump(2).c_str());
  std::fclose(f);

  if (rep.verdict == Verdict::not_basis) return 3;
  if (rep.verdict == Verdict::borderline) return 4;
  return 0;
}

int run_gram(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  const std::vector<int> sizes = cfg.sizes ? *cfg.sizes : std::vector<int>{10, 20, 40};
  const auto entries = slb::gram_section(p, sp, theta_from(cfg), sizes);
  CsvWriter csv(out / "gram.csv", "size,min_eig,max_eig");
  for (const slb::GramEntry& g : entries) {
    csv.field(g.size);
    csv.field(g.min_eig);
    csv.field(g.max_eig);
    csv.endrow();
  }
  return 0;
}

int run_sweep(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  if (p.boundary_dim() != 2)
    throw slb::ConfigError("cli: pair sweep needs a problem with N = 2");
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  CsvWriter csv(out / "sweep.csv",
                "n1,n2,sigma_min_full,verdict_full,verdict_reduced,agree");
  for (int n1 = 0; n1 <= cfg.n_max; ++n1) {
    for (int n2 = n1 + 1; n2 <= cfg.n_max; ++n2) {
      const slb::ThetaSet theta(std::vector<int>{n1, n2});
      const slb::CrossCheck cc = slb::cross_validate(p, sp, theta);
      csv.field(n1);
      csv.field(n2);
      csv.field(cc.smin_full);
      csv.field(slb::to_string(cc.full));
      csv.field(cc.applicable ? slb::to_string(cc.reduced) : std::string("n/a"));
      csv.field(cc.applicable ? (cc.agree ? "yes" : "no") : std::string("n/a"));
      csv.endrow();
    }
  }
  return 0;
}

int run_beta(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  const slb::AsymptoticReport rep = slb::asymptotic_diagnostics(sp, p);
  CsvWriter csv(out / "beta.csv", "n,beta,xi,sqrt_offset");
  for (const slb::EigenPair& pair : sp.pairs) {
    const std::size_t i = static_cast<std::size_t>(pair.n);
    csv.field(pair.n);
    csv.field(pair.beta);
    csv.field(rep.xi[i]);
    csv.field(rep.sqrt_offsets[i]);
    csv.endrow();
  }
  return 0;
}

int run_defect(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const slb::Spectrum sp = slb::compute_spectrum(p, cfg.n_max);
  const auto defect = slb::completeness_defect(p, sp, theta_from(cfg), cfg.n_max);
  CsvWriter csv(out / "defect.csv", "n,residual");
  for (std::size_t i = 0; i < defect.tested_indices.size(); ++i) {
    csv.field(defect.tested_indices[i]);
    csv.field(defect.residuals[i]);
    csv.endrow();
  }
  return 0;
}

int run_dump_omega(const slb::Config& cfg, const std::filesystem::path& out) {
  const slb::Problem p = cfg.make_problem();
  const double half_ind = 0.5 * (p.f().index() + p.F().index());
  const double tau_top = cfg.n_max - half_ind + 1.5;
  CsvWriter csv(out / "omega.csv", "lambda,omega");
  for (double sigma = 4.0; sigma > 0.0; sigma -= 0.02) {
    csv.field(-sigma * sigma);
    csv.field(slb::characteristic(p, -sigma * sigma));
    csv.endrow();
  }
  for (double tau = 0.0; tau <= tau_top; tau += 0.02) {
    csv.field(tau * tau);
    csv.field(slb::characteristic(p, tau * tau));
    csv.endrow();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra and Riesz basis checks for Schrodinger operators with "
               "eigenparameter-dependent boundary conditions"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::vector<int> theta_override;
  std::vector<int> sizes_override;
  int n_max_override = -1;
  int grid_override = -1;
  std::string sweep_mode = "pairs";

  app.add_option("--config", config_path, "Problem config (JSON)")->required();
  app.add_option("--mode", sweep_mode, "Sweep mode (pairs)");
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--theta", theta_override, "Removed index list");
  app.add_option("--sizes", sizes_override, "Gram section sizes");
  app.add_option("--n-max", n_max_override, "Highest eigenvalue index");
  app.add_option("--grid", grid_override, "Potential grid size");

  auto* cmd_spectrum = app.add_subcommand("spectrum", "Eigenvalue/eigenfunction CSV");
  auto* cmd_basis = app.add_subcommand("basis-check", "Theorem-based basis verdict");
  auto* cmd_gram = app.add_subcommand("gram", "Gram section extreme eigenvalues");
  auto* cmd_sweep = app.add_subcommand("sweep", "Pair sweep with reduced cross-check");
  auto* cmd_beta = app.add_subcommand("beta", "Link constants and asymptotics");
  auto* cmd_defect = app.add_subcommand("defect", "Completeness defect residuals");
  auto* cmd_omega = app.add_subcommand("dump-omega", "Characteristic function scan");

  CLI11_PARSE(app, argc, argv);

  try {
    slb::Config cfg = slb::load_config(config_path);
    if (!theta_override.empty()) cfg.theta = theta_override;
    if (!sizes_override.empty()) cfg.sizes = sizes_override;
    if (n_max_override >= 0) cfg.n_max = n_max_override;
    if (grid_override > 0) {
      if (cfg.preset == "samples")
        throw slb::ConfigError("cli: --grid cannot override explicit samples");
      cfg.grid_size = grid_override;
    }
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path out(out_dir);

    if (cmd_spectrum->parsed()) return run_spectrum(cfg, out);
    if (cmd_basis->parsed()) return run_basis_check(cfg, out);
    if (cmd_gram->parsed()) return run_gram(cfg, out);
    if (cmd_sweep->parsed()) {
      if (sweep_mode != "pairs")
        throw slb::ConfigError("cli: unsupported sweep mode '" + sweep_mode + "'");
      return run_sweep(cfg, out);
    }
    if (cmd_beta->parsed()) return run_beta(cfg, out);
    if (cmd_defect->parsed()) return run_defect(cfg, out);
    if (cmd_omega->parsed()) return run_dump_omega(cfg, out);
  } catch (const slb::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const slb::ComputationError& e) {
    std::fprintf(stderr, "computation error: %s\n", e.what());
    return 2;
  }
  return 0;
}
