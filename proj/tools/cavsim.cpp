// Command-line front end: parameter sweeps and scheme/teleportation reports,
// emitted as CSV with a '#'-prefixed provenance header.  Exit codes: 0 on
// success, 2 on configuration errors, 3 on numerical invariant violations.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavsim/entanglement.hpp"
#include "cavsim/jcm.hpp"
#include "cavsim/schemes.hpp"
#include "cavsim/sweep.hpp"
#include "cavsim/teleport.hpp"
#include "cavsim/tensor.hpp"

namespace {

using namespace cavsim;

const double kPi = std::acos(-1.0);

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  for (int i = 0; i < points; ++i)
    out[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
  return out;
}

std::vector<double> logspace(double lo, double hi, int points) {
  std::vector<double> out(points);
  const double llo = std::log10(lo);
  const double lhi = std::log10(hi);
  for (int i = 0; i < points; ++i)
    out[i] = std::pow(10.0, points == 1 ? llo : llo + (lhi - llo) * i / (points - 1));
  return out;
}

FieldState make_coherent(double nbar, double alpha, Index n_max) {
  const double amp = alpha > 0.0 ? alpha : std::sqrt(nbar);
  FieldState field = coherent_field(amp, n_max);
  const double loss = 1.0 - field.norm_sq();
  if (loss > kCoherentMassLossWarning)
    std::fprintf(stderr, "warning: coherent truncation drops %.3g probability mass\n", loss);
  return field;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Flat `key = value` config lines, UTF-8, '#' comments, turned into
// --key=value tokens.
std::vector<std::string> read_config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::vector<std::string> tokens;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": empty key");
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Splices config-file tokens in ahead of the explicit flags, so that with the
// take-last option policy the command line wins.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw std::invalid_argument("--config needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  const std::vector<std::string> tokens = read_config_tokens(path);
  std::vector<std::string> out;
  std::size_t pos = 0;
  if (!rest.empty() && rest[0].rfind('-', 0) != 0) {
    out.push_back(rest[0]);  // keep the subcommand name first
    pos = 1;
  }
  out.insert(out.end(), tokens.begin(), tokens.end());
  out.insert(out.end(), rest.begin() + pos, rest.end());
  return out;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "bp" || name == "browne-plenio") return Scheme::BrownePlenio;
  if (name == "new" || name == "single-photon") return Scheme::SinglePhoton;
  throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "'");
}

const char* scheme_label(Scheme s) {
  return s == Scheme::BrownePlenio ? "bp" : "new";
}

// ---------------------------------------------------------------------------

struct FieldSweepOpts {
  double nbar = 10.0;
  double alpha = 0.0;  // 0 means: derive from nbar
  double time_max = 25.0;
  int points = 1000;
  Index n_max = 100;
  std::string output;
};

SweepResult inversion_sweep(const FieldSweepOpts& o) {
  const FieldState field = make_coherent(o.nbar, o.alpha, o.n_max);
  SweepResult sweep;
  sweep.add_provenance("command", std::string("inversion"));
  sweep.add_provenance("nbar", o.alpha > 0.0 ? o.alpha * o.alpha : o.nbar);
  sweep.add_provenance("n_max", static_cast<double>(o.n_max));
  sweep.add_provenance("lambda_t_max", o.time_max);
  sweep.add_provenance("points", static_cast<double>(o.points));
  sweep.columns = {"lambda_t", "inversion"};
  for (double t : linspace(0.0, o.time_max, o.points)) {
    const JointPureState psi = evolve_resonant_closed(AtomState::excited(), field, t);
    const DensityMatrix rho = DensityMatrix::from_pure(psi.amplitudes, psi.layout);
    sweep.rows.push_back({t, atomic_inversion(partial_trace(rho, 0))});
  }
  return sweep;
}

SweepResult entropy_resonant_sweep(const FieldSweepOpts& o) {
  const FieldState field = make_coherent(o.nbar, o.alpha, o.n_max);
  SweepResult sweep;
  sweep.add_provenance("command", std::string("entropy-resonant"));
  sweep.add_provenance("nbar", o.alpha > 0.0 ? o.alpha * o.alpha : o.nbar);
  sweep.add_provenance("n_max", static_cast<double>(o.n_max));
  sweep.add_provenance("lambda_t_max", o.time_max);
  sweep.add_provenance("points", static_cast<double>(o.points));
  sweep.columns = {"lambda_t", "entropy_bits"};
  for (double t : linspace(0.0, o.time_max, o.points)) {
    const JointPureState psi = evolve_resonant_closed(AtomState::excited(), field, t);
    const DensityMatrix rho = DensityMatrix::from_pure(psi.amplitudes, psi.layout);
    sweep.rows.push_back({t, von_neumann_entropy(partial_trace(rho, 0))});
  }
  return sweep;
}

SweepResult entropy_dispersive_sweep(const FieldSweepOpts& o, double phi) {
  const FieldState field = make_coherent(o.nbar, o.alpha, o.n_max);
  SweepResult sweep;
  sweep.add_provenance("command", std::string("entropy-dispersive"));
  sweep.add_provenance("nbar", o.alpha > 0.0 ? o.alpha * o.alpha : o.nbar);
  sweep.add_provenance("phi", phi);
  sweep.add_provenance("n_max", static_cast<double>(o.n_max));
  sweep.add_provenance("chi_t_max", o.time_max);
  sweep.add_provenance("points", static_cast<double>(o.points));
  sweep.columns = {"chi_t", "entropy_bits"};
  for (double t : linspace(0.0, o.time_max, o.points))
    sweep.rows.push_back({t, schmidt_entropy_dispersive(field, phi, t)});
  return sweep;
}

SweepResult contour_sweep(Scheme scheme, int points, double lambda_tau_max,
                          double epsilon_max) {
  SweepResult sweep;
  sweep.add_provenance("command", std::string("scheme-contour"));
  sweep.add_provenance("scheme", std::string(scheme_label(scheme)));
  sweep.add_provenance("points", static_cast<double>(points));
  sweep.add_provenance("lambda_tau_max", lambda_tau_max);
  sweep.add_provenance("epsilon_max", epsilon_max);
  sweep.columns = {"lambda_tau", "epsilon", "fidelity"};
  for (int i = 0; i < points; ++i) {
    const double lt = lambda_tau_max * (i + 1) / points;  // (0, max]
    for (double eps : linspace(0.0, epsilon_max, points))
      sweep.rows.push_back({lt, eps, scheme_fidelity_unequal(scheme, lt, eps)});
  }
  return sweep;
}

SweepResult thermal_negativity_sweep(Scheme scheme, double lambda_tau, double t_min,
                                     double t_max, int points, Index thermal_n_max) {
  SweepResult sweep;
  sweep.add_provenance("command", std::string("thermal-negativity"));
  sweep.add_provenance("scheme", std::string(scheme_label(scheme)));
  sweep.add_provenance("lambda_tau", lambda_tau);
  sweep.add_provenance("temperature_min", t_min);
  sweep.add_provenance("temperature_max", t_max);
  sweep.add_provenance("points", static_cast<double>(points));
  sweep.add_provenance("thermal_n_max", static_cast<double>(thermal_n_max));
  sweep.add_provenance("hbar_over_kB", kHbarOverKb);
  sweep.columns = {"T_over_omega0", "log_negativity"};
  for (double temp : logspace(t_min, t_max, points)) {
    SchemeConfig config;
    config.scheme = scheme;
    config.lambda_tau = lambda_tau;
    config.thermal_target =
        scheme == Scheme::BrownePlenio ? ThermalTarget::Cavities : ThermalTarget::Atom;
    config.thermal = {temp};
    config.thermal_n_max = thermal_n_max;
    sweep.rows.push_back({temp, run_scheme(config).log_negativity});
  }
  return sweep;
}

SweepResult teleport_surface_sweep(double lambda_tau, double t_min, double t_max,
                                   int t_points, int a_points) {
  SweepResult sweep;
  sweep.add_provenance("command", std::string("teleport-surface"));
  sweep.add_provenance("lambda_tau", lambda_tau);
  sweep.add_provenance("temperature_min", t_min);
  sweep.add_provenance("temperature_max", t_max);
  sweep.add_provenance("points", static_cast<double>(t_points));
  sweep.add_provenance("a_squared_points", static_cast<double>(a_points));
  sweep.add_provenance("hbar_over_kB", kHbarOverKb);
  sweep.columns = {"T_over_omega0", "a_squared", "fidelity_a", "fidelity_b"};
  for (double temp : logspace(t_min, t_max, t_points)) {
    for (double a2 : linspace(0.0, 1.0, a_points)) {
      const Complex a = std::sqrt(a2);
      const Complex b = std::sqrt(1.0 - a2);
      const ThermalParams thermal{temp};
      double fa = teleport_fidelity_closed_form(TeleportOutcome::A, a, b, lambda_tau, thermal);
      double fb = teleport_fidelity_closed_form(TeleportOutcome::B, a, b, lambda_tau, thermal);
      sweep.rows.push_back({temp, a2, fa, fb});
    }
  }
  return sweep;
}

// ---------------------------------------------------------------------------

void print_scheme_report(const SchemeConfig& config) {
  const SchemeOutcome outcome = run_scheme(config);
  std::printf("scheme        %s\n", scheme_label(config.scheme));
  std::printf("lambda_tau    %.6f\n", config.lambda_tau);
  if (config.epsilon != 0.0) std::printf("epsilon       %.6f\n", config.epsilon);
  if (config.thermal_target != ThermalTarget::None)
    std::printf("T/omega0      %.6g K/THz (%s thermal)\n", config.thermal.scaled_temperature,
                config.thermal_target == ThermalTarget::Cavities ? "cavities" : "atom");
  std::printf("F = %.4f\n", outcome.fidelity_vs_target);
  std::printf("P = %.4f\n", outcome.success_probability);
  std::printf("target        %s\n", bell_name(outcome.target));
  std::printf("E_N           %.4f\n", outcome.log_negativity);
  if (config.scheme == Scheme::SinglePhoton && config.thermal_target == ThermalTarget::None)
    std::printf("P(prepare |1>_A|0>_B per auxiliary atom) = %.4f\n",
                single_photon_prep_probability(config.lambda_tau));
}

void print_teleport_report(double lambda_tau, double temperature, double a_squared,
                           const std::string& output) {
  SchemeConfig config;
  config.scheme = Scheme::SinglePhoton;
  config.lambda_tau = lambda_tau;
  config.thermal_target = ThermalTarget::Atom;
  config.thermal = {temperature};
  const SchemeOutcome scheme = run_scheme(config);

  const Complex a = std::sqrt(a_squared);
  const Complex b = std::sqrt(1.0 - a_squared);
  const TeleportReport report = teleport({a, b, scheme.cavity_state});

  std::printf("teleport      lambda_tau=%.6f  T/omega0=%.6g  |a|^2=%.4f\n", lambda_tau,
              temperature, a_squared);
  std::printf("outcome  probability  fidelity      closed_form\n");
  const char* names = "abcd";
  for (int k = 0; k < 4; ++k) {
    const double closed = teleport_fidelity_closed_form(static_cast<TeleportOutcome>(k), a, b,
                                                        lambda_tau, {temperature});
    std::printf("   %c     %.9f  %.9f   %.9f\n", names[k], report.probability[k],
                report.fidelity[k], closed);
  }
  std::printf("discarded resource weight outside qubit block: %.3e\n",
              report.discarded_weight);
  const auto bound = purification_bound(1.0, scheme.log_negativity);
  std::printf("resource E_N = %.6f; copies needed per distilled pair >= %.6f\n",
              scheme.log_negativity, bound.min_copies);

  if (!output.empty()) {
    SweepResult sweep;
    sweep.add_provenance("command", std::string("teleport"));
    sweep.add_provenance("lambda_tau", lambda_tau);
    sweep.add_provenance("temperature", temperature);
    sweep.add_provenance("a_squared", a_squared);
    sweep.add_provenance("hbar_over_kB", kHbarOverKb);
    sweep.columns = {"outcome", "probability", "fidelity", "fidelity_closed_form"};
    for (int k = 0; k < 4; ++k)
      sweep.rows.push_back({static_cast<double>(k), report.probability[k],
                            report.fidelity[k],
                            teleport_fidelity_closed_form(static_cast<TeleportOutcome>(k), a,
                                                          b, lambda_tau, {temperature})});
    sweep.save(output);
  }
}

SweepResult reproduce_figure(const std::string& id, Index n_max) {
  FieldSweepOpts field_opts;
  field_opts.n_max = n_max;
  if (id == "1a") return inversion_sweep(field_opts);
  if (id == "1b") return entropy_resonant_sweep(field_opts);
  if (id == "2") {
    field_opts.time_max = 2.0 * kPi;
    return entropy_dispersive_sweep(field_opts, 0.0);
  }
  if (id == "4a") return contour_sweep(Scheme::BrownePlenio, 101, kPi, 0.9);
  if (id == "4b") return contour_sweep(Scheme::SinglePhoton, 101, kPi, 0.9);
  if (id == "5a")
    return thermal_negativity_sweep(Scheme::BrownePlenio, 0.01 * kPi, 1e-2, 10.0, 100, 1);
  if (id == "5b")
    return thermal_negativity_sweep(Scheme::SinglePhoton, 0.288 * kPi, 1e-2, 10.0, 100, 1);
  if (id == "6") return teleport_surface_sweep(0.288 * kPi, 1e-2, 10.0, 100, 21);
  throw CLI::ValidationError("--id", "unknown figure id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cavsim: Jaynes-Cummings atom-cavity dynamics, cavity-entangling "
               "schemes, and teleportation fidelities on truncated Fock spaces"};
  app.require_subcommand(1);

  // Config files are spliced into the argument list ahead of explicit flags
  // (see expand_config), so with take-last the command line wins.
  static std::string config_path_for_help;
  auto configure_sub = [](CLI::App* sub) {
    sub->option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    sub->add_option("--config", config_path_for_help,
                    "Config file: flat `key = value` lines, '#' comments; flags win");
  };

  // inversion ---------------------------------------------------------------
  FieldSweepOpts inv;
  auto* inversion = app.add_subcommand("inversion",
      "Atomic inversion of an excited atom in a coherent field vs scaled time");
  configure_sub(inversion);
  inversion->add_option("--nbar", inv.nbar, "Mean photon number")->capture_default_str();
  inversion->add_option("--alpha", inv.alpha, "Coherent amplitude (overrides --nbar)");
  inversion->add_option("--lambda-t-max", inv.time_max, "Sweep end")->capture_default_str();
  inversion->add_option("--points", inv.points, "Grid points")
      ->check(CLI::Range(2, 1000000))->capture_default_str();
  inversion->add_option("--n-max", inv.n_max, "Fock truncation level")
      ->envname("CAVSIM_N_MAX")->check(CLI::Range(1, 100000))->capture_default_str();
  inversion->add_option("--output", inv.output, "CSV path")->required();
  inversion->callback([&] { inversion_sweep(inv).save(inv.output); });

  // entropy-resonant ----------------------------------------------------------
  FieldSweepOpts entr;
  auto* entropy_res = app.add_subcommand("entropy-resonant",
      "Von Neumann entropy of the atom along resonant evolution");
  configure_sub(entropy_res);
  entropy_res->add_option("--nbar", entr.nbar, "Mean photon number")->capture_default_str();
  entropy_res->add_option("--alpha", entr.alpha, "Coherent amplitude (overrides --nbar)");
  entropy_res->add_option("--lambda-t-max", entr.time_max, "Sweep end")->capture_default_str();
  entropy_res->add_option("--points", entr.points, "Grid points")
      ->check(CLI::Range(2, 1000000))->capture_default_str();
  entropy_res->add_option("--n-max", entr.n_max, "Fock truncation level")
      ->envname("CAVSIM_N_MAX")->check(CLI::Range(1, 100000))->capture_default_str();
  entropy_res->add_option("--output", entr.output, "CSV path")->required();
  entropy_res->callback([&] { entropy_resonant_sweep(entr).save(entr.output); });

  // entropy-dispersive --------------------------------------------------------
  FieldSweepOpts disp;
  disp.time_max = 2.0 * kPi;
  double disp_phi = 0.0;
  auto* entropy_disp = app.add_subcommand("entropy-dispersive",
      "Entanglement entropy of (|g>+e^{i phi}|e>)/sqrt2 with a coherent field vs chi*t");
  configure_sub(entropy_disp);
  entropy_disp->add_option("--nbar", disp.nbar, "Mean photon number")->capture_default_str();
  entropy_disp->add_option("--alpha", disp.alpha, "Coherent amplitude (overrides --nbar)");
  entropy_disp->add_option("--phi", disp_phi, "Atomic superposition phase")
      ->capture_default_str();
  entropy_disp->add_option("--lambda-t-max", disp.time_max, "Sweep end (in chi*t)")
      ->capture_default_str();
  entropy_disp->add_option("--points", disp.points, "Grid points")
      ->check(CLI::Range(2, 1000000))->capture_default_str();
  entropy_disp->add_option("--n-max", disp.n_max, "Fock truncation level")
      ->envname("CAVSIM_N_MAX")->check(CLI::Range(1, 100000))->capture_default_str();
  entropy_disp->add_option("--output", disp.output, "CSV path")->required();
  entropy_disp->callback(
      [&] { entropy_dispersive_sweep(disp, disp_phi).save(disp.output); });

  // scheme --------------------------------------------------------------------
  std::string scheme_name;
  SchemeConfig scheme_config;
  scheme_config.lambda_tau = kPi / 4.0;
  double scheme_temperature = -1.0;
  auto* scheme_cmd = app.add_subcommand("scheme",
      "Run a cavity-entangling scheme and report fidelity and success probability");
  configure_sub(scheme_cmd);
  scheme_cmd->add_option("--scheme", scheme_name, "bp | new")->required();
  scheme_cmd->add_option("--lambda-tau", scheme_config.lambda_tau, "Scaled interaction time")
      ->required();
  scheme_cmd->add_option("--epsilon", scheme_config.epsilon,
                         "Interaction-time deviation: tau_B = tau_A (1 - epsilon)")
      ->capture_default_str();
  scheme_cmd->add_option("--temperature", scheme_temperature,
                         "T/omega0 in K/THz; engages the thermal variant");
  scheme_cmd->add_option("--n-max", scheme_config.n_max, "Pure-path cavity truncation")
      ->check(CLI::Range(1, 64))->capture_default_str();
  scheme_cmd->add_option("--thermal-n-max", scheme_config.thermal_n_max,
                         "Thermal field truncation")
      ->check(CLI::Range(1, 32))->capture_default_str();
  scheme_cmd->callback([&] {
    scheme_config.scheme = parse_scheme(scheme_name);
    if (scheme_temperature >= 0.0) {
      scheme_config.thermal_target = scheme_config.scheme == Scheme::BrownePlenio
                                         ? ThermalTarget::Cavities
                                         : ThermalTarget::Atom;
      scheme_config.thermal = {scheme_temperature};
    }
    print_scheme_report(scheme_config);
  });

  // scheme-contour --------------------------------------------------------------
  std::string contour_scheme_name;
  int contour_points = 101;
  double contour_lt_max = kPi;
  double contour_eps_max = 0.9;
  std::string contour_output;
  auto* contour_cmd = app.add_subcommand("scheme-contour",
      "Unequal-interaction-time fidelity grid over (lambda_tau, epsilon)");
  configure_sub(contour_cmd);
  contour_cmd->add_option("--scheme", contour_scheme_name, "bp | new")->required();
  contour_cmd->add_option("--points", contour_points, "Grid points per axis")
      ->check(CLI::Range(2, 2001))->capture_default_str();
  contour_cmd->add_option("--lambda-tau-max", contour_lt_max, "Upper end of lambda_tau")
      ->capture_default_str();
  contour_cmd->add_option("--epsilon-max", contour_eps_max, "Upper end of epsilon")
      ->check(CLI::Range(0.0, 0.999))->capture_default_str();
  contour_cmd->add_option("--output", contour_output, "CSV path")->required();
  contour_cmd->callback([&] {
    contour_sweep(parse_scheme(contour_scheme_name), contour_points, contour_lt_max,
                  contour_eps_max)
        .save(contour_output);
  });

  // thermal-negativity ----------------------------------------------------------
  std::string neg_scheme_name;
  double neg_lambda_tau = -1.0;
  double neg_t_min = 1e-2;
  double neg_t_max = 10.0;
  int neg_points = 100;
  Index neg_thermal_n_max = 1;
  std::string neg_output;
  auto* neg_cmd = app.add_subcommand("thermal-negativity",
      "Logarithmic negativity of a thermal scheme vs scaled temperature");
  configure_sub(neg_cmd);
  neg_cmd->add_option("--scheme", neg_scheme_name, "bp | new")->required();
  neg_cmd->add_option("--lambda-tau", neg_lambda_tau,
                      "Scaled interaction time (default 0.01 pi for bp, 0.288 pi for new)");
  neg_cmd->add_option("--temperature-min", neg_t_min, "Sweep start (K/THz)")
      ->capture_default_str();
  neg_cmd->add_option("--temperature-max", neg_t_max, "Sweep end (K/THz)")
      ->capture_default_str();
  neg_cmd->add_option("--points", neg_points, "Log-spaced grid points")
      ->check(CLI::Range(2, 100000))->capture_default_str();
  neg_cmd->add_option("--thermal-n-max", neg_thermal_n_max, "Thermal field truncation")
      ->check(CLI::Range(1, 32))->capture_default_str();
  neg_cmd->add_option("--output", neg_output, "CSV path")->required();
  neg_cmd->callback([&] {
    const Scheme s = parse_scheme(neg_scheme_name);
    const double lt = neg_lambda_tau > 0.0
                          ? neg_lambda_tau
                          : (s == Scheme::BrownePlenio ? 0.01 * kPi : 0.288 * kPi);
    thermal_negativity_sweep(s, lt, neg_t_min, neg_t_max, neg_points, neg_thermal_n_max)
        .save(neg_output);
  });

  // teleport ---------------------------------------------------------------------
  double tel_lambda_tau = 0.288 * kPi;
  double tel_temperature = 1.0;
  double tel_a_squared = 0.5;
  std::string tel_output;
  auto* tel_cmd = app.add_subcommand("teleport",
      "Teleport a|0>+b|1> over the thermal single-photon-scheme resource");
  configure_sub(tel_cmd);
  tel_cmd->add_option("--lambda-tau", tel_lambda_tau, "Scaled interaction time")
      ->capture_default_str();
  tel_cmd->add_option("--temperature", tel_temperature, "T/omega0 in K/THz")
      ->capture_default_str();
  tel_cmd->add_option("--a-squared", tel_a_squared, "|a|^2 of the teleported qubit")
      ->check(CLI::Range(0.0, 1.0))->capture_default_str();
  tel_cmd->add_option("--output", tel_output, "Optional CSV path");
  tel_cmd->callback([&] {
    print_teleport_report(tel_lambda_tau, tel_temperature, tel_a_squared, tel_output);
  });

  // reproduce-figure ----------------------------------------------------------------
  std::string figure_id;
  Index figure_n_max = 100;
  std::string figure_output;
  auto* figure_cmd = app.add_subcommand("reproduce-figure",
      "Emit the CSV behind one of the reference curves");
  configure_sub(figure_cmd);
  figure_cmd->add_option("--id", figure_id, "One of 1a,1b,2,4a,4b,5a,5b,6")
      ->required()
      ->check(CLI::IsMember({"1a", "1b", "2", "4a", "4b", "5a", "5b", "6"}));
  figure_cmd->add_option("--n-max", figure_n_max, "Fock truncation level")
      ->envname("CAVSIM_N_MAX")->check(CLI::Range(1, 100000))->capture_default_str();
  figure_cmd->add_option("--output", figure_output, "CSV path")->required();
  figure_cmd->callback([&] { reproduce_figure(figure_id, figure_n_max).save(figure_output); });

  try {
    std::vector<std::string> args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const invariant_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
