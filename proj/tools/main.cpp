// dirosc command-line front end. Emits reproducible CSV/JSON tables:
// energy spectra, radial mode profiles, coherent-state evolution grids,
// and the full self-verification report.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dirosc/coherent.hpp"
#include "dirosc/defect.hpp"
#include "dirosc/radial.hpp"
#include "dirosc/textio.hpp"
#include "dirosc/verify.hpp"

namespace {

using namespace dirosc;

struct RunConfig {
  std::string defect = "string";
  double alpha = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double flux_ratio = 0.0;
  double torsion = 0.0;
  double kz = 0.0;
  int l_max = 3;
  int nr_max = 3;
  int l = 0;
  std::string component = "upper";
  double xi_re = 0.5;
  double xi_im = 0.0;
  double tau_max = 0.0;  // 0 selects one full revival period
  int tau_steps = 9;
  double rho_min = 0.05;
  double rho_max = 6.0;
  int rho_steps = 120;
  std::string format = "csv";
  std::string out;
  unsigned long long seed = 12345;
  double inject_casimir = 0.0;
};

DefectKind parse_kind(const std::string& name) {
  if (name == "string") return DefectKind::CosmicString;
  if (name == "magnetic") return DefectKind::MagneticCosmicString;
  return DefectKind::CosmicDislocation;
}

Component parse_component(const std::string& name) {
  return name == "lower" ? Component::Lower : Component::Upper;
}

DefectConfig make_defect(const RunConfig& rc) {
  return DefectConfig(parse_kind(rc.defect), rc.alpha, rc.mass, rc.omega,
                      rc.flux_ratio, rc.torsion);
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw std::invalid_argument("grid needs at least one point");
  if (steps > 1 && hi <= lo)
    throw std::invalid_argument("grid upper bound must exceed lower bound");
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i)
    grid[i] = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
  return grid;
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n",
                 path.c_str());
    return 2;
  }
  file << text;
  return file.good() ? 0 : 2;
}

// ---- spectrum ----

struct SpectrumRow {
  int n_r, l;
  double lambda_minus, lambda_plus, k_bargmann;
  double e_squared, e_particle, e_antiparticle;
};

int run_spectrum(const DefectConfig& cfg, const RunConfig& rc) {
  if (rc.nr_max < 0 || rc.l_max < 0)
    throw std::invalid_argument("--nr-max and --l-max must be nonnegative");
  const Component comp = parse_component(rc.component);

  std::vector<SpectrumRow> rows;
  for (int n_r = 0; n_r <= rc.nr_max; ++n_r) {
    for (int l = -rc.l_max; l <= rc.l_max; ++l) {
      const QuantumNumbers qn(n_r, l, rc.kz, comp);
      const double e2 = energy_squared(cfg, qn);
      const EnergyBranches branches = energy_branches(e2).value();
      rows.push_back({n_r, l, angular_parameter(cfg, qn, ParamSign::Minus),
                      angular_parameter(cfg, qn, ParamSign::Plus),
                      bargmann_index(centrifugal_parameter(cfg, qn)), e2,
                      branches.particle, branches.antiparticle});
    }
  }

  std::ostringstream out;
  if (rc.format == "csv") {
    out << "kind,component,n_r,l,lambda_minus,lambda_plus,k_bargmann,"
           "e_squared,e_plus,e_minus\n";
    for (const SpectrumRow& r : rows) {
      out << rc.defect << ',' << rc.component << ',' << r.n_r << ',' << r.l
          << ',' << float17(r.lambda_minus) << ',' << float17(r.lambda_plus)
          << ',' << float17(r.k_bargmann) << ',' << float17(r.e_squared) << ','
          << float17(r.e_particle) << ',' << float17(r.e_antiparticle) << '\n';
    }
  } else {
    out << "{\n  \"kind\": \"" << rc.defect << "\",\n  \"component\": \""
        << rc.component << "\",\n  \"kz\": " << float17(rc.kz)
        << ",\n  \"rows\": [\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const SpectrumRow& r = rows[i];
      out << "    {\"n_r\": " << r.n_r << ", \"l\": " << r.l
          << ", \"lambda_minus\": " << float17(r.lambda_minus)
          << ", \"lambda_plus\": " << float17(r.lambda_plus)
          << ", \"k_bargmann\": " << float17(r.k_bargmann)
          << ", \"e_squared\": " << float17(r.e_squared)
          << ", \"e_plus\": " << float17(r.e_particle)
          << ", \"e_minus\": " << float17(r.e_antiparticle) << '}'
          << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
  }
  return write_output(rc.out, out.str());
}

// ---- wavefunction ----

int run_wavefunction(const DefectConfig& cfg, const RunConfig& rc) {
  if (rc.nr_max < 0 || rc.l_max < 0)
    throw std::invalid_argument("--nr-max and --l-max must be nonnegative");
  if (rc.rho_min <= 0.0)
    throw std::invalid_argument("--rho-min must be positive");
  const Component comp = parse_component(rc.component);
  const std::vector<double> grid =
      linear_grid(rc.rho_min, rc.rho_max, rc.rho_steps);

  std::ostringstream out;
  const bool csv = rc.format == "csv";
  if (csv)
    out << "l,n_r,rho,F,chi\n";
  else
    out << "{\n  \"component\": \"" << rc.component << "\",\n  \"modes\": [\n";

  bool first_mode = true;
  for (int l = -rc.l_max; l <= rc.l_max; ++l) {
    for (int n_r = 0; n_r <= rc.nr_max; ++n_r) {
      const QuantumNumbers qn(n_r, l, rc.kz, comp);
      const SturmianMode f_mode = mode_from(cfg, qn, RadialForm::F);
      const SturmianMode chi_mode = mode_from(cfg, qn, RadialForm::Chi);
      const double norm = overlap(f_mode, f_mode);
      if (csv) {
        for (double rho : grid) {
          out << l << ',' << n_r << ',' << float17(rho) << ','
              << float17(sturmian_eval(f_mode, rho)) << ','
              << float17(sturmian_eval(chi_mode, rho)) << '\n';
        }
        out << "# norm l=" << l << " n_r=" << n_r << ' ' << float17(norm)
            << '\n';
      } else {
        if (!first_mode) out << ",\n";
        first_mode = false;
        out << "    {\"l\": " << l << ", \"n_r\": " << n_r
            << ", \"k_bargmann\": " << float17(f_mode.k)
            << ", \"norm\": " << float17(norm) << ", \"samples\": [\n";
        for (size_t i = 0; i < grid.size(); ++i) {
          out << "      {\"rho\": " << float17(grid[i])
              << ", \"F\": " << float17(sturmian_eval(f_mode, grid[i]))
              << ", \"chi\": " << float17(sturmian_eval(chi_mode, grid[i]))
              << '}' << (i + 1 < grid.size() ? ",\n" : "\n");
        }
        out << "    ]}";
      }
    }
  }
  if (!csv) out << "\n  ]\n}\n";
  return write_output(rc.out, out.str());
}

// ---- coherent ----

int run_coherent(const DefectConfig& cfg, const RunConfig& rc) {
  if (rc.rho_min <= 0.0)
    throw std::invalid_argument("--rho-min must be positive");
  if (rc.tau_steps < 1)
    throw std::invalid_argument("--tau-steps must be at least 1");
  const std::complex<double> xi(rc.xi_re, rc.xi_im);
  if (std::abs(xi) >= 1.0)
    throw std::invalid_argument("coherent parameter must satisfy |xi| < 1");
  const Component comp = parse_component(rc.component);
  const QuantumNumbers qn(0, rc.l, rc.kz, comp);
  const double k = bargmann_index(centrifugal_parameter(cfg, qn));
  const double m_omega = cfg.m_omega();
  const double period = coherent_period(m_omega, cfg.hbar);
  const double tau_max = rc.tau_max > 0.0 ? rc.tau_max : period;
  const std::vector<double> taus = linear_grid(0.0, tau_max, rc.tau_steps);
  const std::vector<double> grid =
      linear_grid(rc.rho_min, rc.rho_max, rc.rho_steps);

  std::ostringstream out;
  if (rc.format == "csv") {
    out << "tau,rho,re,im,abs2,norm\n";
    for (double tau : taus) {
      const std::complex<double> xi_tau =
          coherent_evolved(xi, k, m_omega, grid.front(), tau, cfg.hbar).xi_tau;
      const double norm = coherent_norm(xi_tau, k, m_omega);
      for (double rho : grid) {
        const std::complex<double> chi =
            coherent_evolved(xi, k, m_omega, rho, tau, cfg.hbar).value;
        out << float17(tau) << ',' << float17(rho) << ','
            << float17(chi.real()) << ',' << float17(chi.imag()) << ','
            << float17(std::norm(chi)) << ',' << float17(norm) << '\n';
      }
    }
  } else {
    out << "{\n  \"k_bargmann\": " << float17(k) << ",\n  \"xi\": ["
        << float17(rc.xi_re) << ", " << float17(rc.xi_im)
        << "],\n  \"period\": " << float17(period) << ",\n  \"frames\": [\n";
    for (size_t t = 0; t < taus.size(); ++t) {
      const std::complex<double> xi_tau =
          coherent_evolved(xi, k, m_omega, grid.front(), taus[t], cfg.hbar)
              .xi_tau;
      out << "    {\"tau\": " << float17(taus[t])
          << ", \"norm\": " << float17(coherent_norm(xi_tau, k, m_omega))
          << ", \"samples\": [\n";
      for (size_t i = 0; i < grid.size(); ++i) {
        const std::complex<double> chi =
            coherent_evolved(xi, k, m_omega, grid[i], taus[t], cfg.hbar).value;
        out << "      {\"rho\": " << float17(grid[i])
            << ", \"re\": " << float17(chi.real())
            << ", \"im\": " << float17(chi.imag())
            << ", \"abs2\": " << float17(std::norm(chi)) << '}'
            << (i + 1 < grid.size() ? ",\n" : "\n");
      }
      out << "    ]}" << (t + 1 < taus.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
  }
  return write_output(rc.out, out.str());
}

// ---- verify ----

int run_verify(const RunConfig& rc) {
  VerifyOptions options;
  options.seed = rc.seed;
  options.casimir_injection = rc.inject_casimir;
  const VerificationReport report = run_verification(options);
  const std::string text = rc.format == "csv" ? render_report_csv(report)
                                              : render_report_json(report);
  const int io_status = write_output(rc.out, text);
  if (io_status != 0) return io_status;
  return report.all_pass() ? 0 : 1;
}

// ---- option wiring ----

void add_defect_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--defect", rc.defect, "Defect kind")
      ->check(CLI::IsMember({"string", "magnetic", "dislocation"}))
      ->capture_default_str();
  cmd->add_option("--alpha", rc.alpha, "Conical deficit parameter, in (0,1]")
      ->capture_default_str();
  cmd->add_option("--mass", rc.mass, "Fermion mass")->capture_default_str();
  cmd->add_option("--omega", rc.omega, "Oscillator frequency")
      ->capture_default_str();
  cmd->add_option("--flux-ratio", rc.flux_ratio,
                  "Magnetic flux ratio (magnetic string, dislocation)")
      ->capture_default_str();
  cmd->add_option("--torsion", rc.torsion, "Torsion density (dislocation)")
      ->capture_default_str();
  cmd->add_option("--kz", rc.kz, "Axial wave number")->capture_default_str();
  cmd->add_option("--component", rc.component, "Spinor component")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->capture_default_str();
}

void add_range_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--l-max", rc.l_max,
                  "Sweep orbital index over [-l_max, l_max]")
      ->capture_default_str();
  cmd->add_option("--nr-max", rc.nr_max, "Sweep radial index over [0, nr_max]")
      ->capture_default_str();
}

void add_rho_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--rho-min", rc.rho_min, "Radial grid lower bound (> 0)")
      ->capture_default_str();
  cmd->add_option("--rho-max", rc.rho_max, "Radial grid upper bound")
      ->capture_default_str();
  cmd->add_option("--rho-steps", rc.rho_steps, "Radial grid point count")
      ->capture_default_str();
}

void add_output_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--format", rc.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", rc.out, "Output path (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Dirac oscillator around line defects: spectra, radial modes, "
      "su(1,1) coherent states, and numerical self-verification"};
  app.require_subcommand(1);
  // one config file for all subcommands: keys live in a [subcommand]
  // section; values fill only options not already set, so flags win
  app.set_config("--config", "",
                 "Key-value config file ([subcommand] sections; flags win)");
  app.fallthrough();  // lets --config appear after the subcommand name

  RunConfig rc;

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Energy levels over quantum-number ranges");
  add_defect_options(spectrum, rc);
  add_range_options(spectrum, rc);
  add_output_options(spectrum, rc);

  CLI::App* wavefunction = app.add_subcommand(
      "wavefunction", "Normalized radial mode profiles F and chi");
  add_defect_options(wavefunction, rc);
  add_range_options(wavefunction, rc);
  add_rho_options(wavefunction, rc);
  add_output_options(wavefunction, rc);

  CLI::App* coherent = app.add_subcommand(
      "coherent", "Coherent-state profile evolving in fictitious time");
  add_defect_options(coherent, rc);
  coherent->add_option("--l", rc.l, "Orbital index of the mode family")
      ->capture_default_str();
  coherent->add_option("--xi-re", rc.xi_re, "Re xi, |xi| < 1")
      ->capture_default_str();
  coherent->add_option("--xi-im", rc.xi_im, "Im xi")->capture_default_str();
  coherent
      ->add_option("--tau-max", rc.tau_max,
                   "Evolution span (0 selects one full period)")
      ->capture_default_str();
  coherent->add_option("--tau-steps", rc.tau_steps, "Time sample count")
      ->capture_default_str();
  add_rho_options(coherent, rc);
  add_output_options(coherent, rc);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run every invariant suite and report residuals");
  verify->add_option("--seed", rc.seed, "Seed for sampled identity checks")
      ->capture_default_str();
  verify->add_option("--inject-casimir-error", rc.inject_casimir)->group("");
  add_output_options(verify, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_verify(rc);
    const DefectConfig cfg = make_defect(rc);
    if (spectrum->parsed()) return run_spectrum(cfg, rc);
    if (wavefunction->parsed()) return run_wavefunction(cfg, rc);
    return run_coherent(cfg, rc);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
