// Copyright 2026 The fockent Authors
// SPDX-License-Identifier: Apache-2.0

// fockent: occupation-number entanglement scenarios, brute force vs closed form.
//
// Exit codes: 0 success, 2 invalid arguments or unwritable output,
// 3 size guard exceeded, 4 numerical check failed.

#include <fockent/acceptance.hpp>
#include <fockent/scenarios.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>

namespace {

struct Common {
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 0;
  double tol = 1e-10;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output path ('-' for stdout)")->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--seed", c.seed, "Seed for randomized instances")->capture_default_str();
  cmd->add_option("--tol", c.tol, "Largest accepted |brute force - closed form|")->capture_default_str();
}

/// Writes the table, prints the summary, and turns an oversized error into exit 4.
int finish(const fockent::ScenarioResult& r, const Common& c) {
  fockent::emit_table(r.table, fockent::table_format_from_string(c.format), c.out);
  std::cerr << r.summary << '\n';
  if (!(r.max_error <= c.tol)) {
    std::cerr << "error: max |error| " << fockent::format_double(r.max_error) << " exceeds --tol "
              << fockent::format_double(c.tol) << '\n';
    return 4;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mode entanglement of many-body states in the occupation-number representation"};
  app.require_subcommand(1);
  std::function<int()> action;

  Common fermi_c;
  fockent::FermiParams fermi_p;
  auto* fermi = app.add_subcommand("fermi", "Filled Fermi sea and its single particle-hole excitations");
  add_common(fermi, fermi_c);
  fermi->add_option("--modes", fermi_p.modes, "Number of modes")->capture_default_str();
  fermi->add_option("--filled", fermi_p.filled, "Occupied modes in the sea")->capture_default_str();
  fermi->add_option("--max-subset", fermi_p.max_subset, "Largest subset size scanned")->capture_default_str();
  fermi->callback([&] { action = [&] { return finish(fockent::run_fermi(fermi_p), fermi_c); }; });

  Common qh_c;
  fockent::QhParams qh_p;
  std::size_t qh_modes = 0;
  auto* qh = app.add_subcommand("qh", "Uniform Landau-level filling: S = h(frac(nu))");
  add_common(qh, qh_c);
  qh->add_option("--filling", qh_p.filling, "Filling factor as an exact rational, e.g. 7/3")->capture_default_str();
  auto* qh_m = qh->add_option("--modes", qh_modes, "Modes in the model state (default: denominator of frac(nu))");
  qh->callback([&] {
    if (qh_m->count() > 0) qh_p.modes = qh_modes;
    action = [&] { return finish(fockent::run_qh(qh_p), qh_c); };
  });

  Common bcs_c;
  fockent::BcsParams bcs_p;
  auto* bcs = app.add_subcommand("bcs", "BCS pair states, number projected by default");
  add_common(bcs, bcs_c);
  bcs->add_option("--modes", bcs_p.modes, "Pair modes M")->capture_default_str();
  bcs->add_option("--n", bcs_p.particles, "Particle number N (even)")->capture_default_str();
  bcs->add_option("--g", bcs_p.g, "random | uniform | step | path to a bcs_g table")->capture_default_str();
  bcs->add_option("--g-min", bcs_p.g_min, "Smallest random |g|")->capture_default_str();
  bcs->add_option("--g-max", bcs_p.g_max, "Largest random |g|")->capture_default_str();
  bcs->add_flag("--unprojected", bcs_p.unprojected, "Use the number-nonconserving product state");
  bcs->callback([&] {
    bcs_p.seed = bcs_c.seed;
    action = [&] { return finish(fockent::run_bcs(bcs_p), bcs_c); };
  });

  Common exc_c;
  fockent::ExcitonParams exc_p;
  auto* exc = app.add_subcommand("exciton", "Electron-hole pair superpositions");
  add_common(exc, exc_c);
  exc->add_option("--rows", exc_p.rows, "Electron momenta")->capture_default_str();
  exc->add_option("--cols", exc_p.cols, "Hole momenta")->capture_default_str();
  exc->add_option("--channel", exc_p.channel, "Spin channel")
      ->check(CLI::IsMember({"spinless", "triplet_up", "triplet_zero", "triplet_down", "singlet"}))
      ->capture_default_str();
  exc->add_option("--table", exc_p.table, "random | delta | path to an exciton_A table")->capture_default_str();
  exc->callback([&] {
    exc_p.seed = exc_c.seed;
    action = [&] { return finish(fockent::run_exciton(exc_p), exc_c); };
  });

  Common bog_c;
  fockent::BogoliubovParams bog_p;
  auto* bog = app.add_subcommand("bogoliubov", "Number-conserving Bogoliubov ground state");
  add_common(bog, bog_c);
  bog->add_option("--modes", bog_p.modes, "Pair modes M")->capture_default_str();
  bog->add_option("--n", bog_p.particles, "Particle number N (even)")->capture_default_str();
  bog->add_option("--c", bog_p.c, "random | zero | path to a bogoliubov_c table")->capture_default_str();
  bog->add_option("--c-min", bog_p.c_min, "Smallest random |c|")->capture_default_str();
  bog->add_option("--c-max", bog_p.c_max, "Largest random |c| (< 1)")->capture_default_str();
  bog->callback([&] {
    bog_p.seed = bog_c.seed;
    action = [&] { return finish(fockent::run_bogoliubov(bog_p), bog_c); };
  });

  Common dyn_c;
  dyn_c.tol = 1e-8;
  fockent::DynamicsParams dyn_p;
  auto* dyn = app.add_subcommand("dynamics", "Entanglement along exp(-iHt) from a basis state");
  add_common(dyn, dyn_c);
  dyn->add_option("--hamiltonian", dyn_p.hamiltonian, "Hamiltonian JSON (default: two-mode hopping)");
  dyn->add_option("--hopping", dyn_p.hopping, "Hopping amplitude of the built-in model")->capture_default_str();
  dyn->add_option("--initial", dyn_p.initial, "Initial occupations, comma separated")->delimiter(',');
  dyn->add_option("--subset", dyn_p.subset, "Modes of the subsystem, comma separated")->delimiter(',');
  dyn->add_option("--t-max", dyn_p.t_max, "Final time")->capture_default_str();
  dyn->add_option("--steps", dyn_p.steps, "Time steps")->capture_default_str();
  dyn->callback([&] { action = [&] { return finish(fockent::run_dynamics(dyn_p), dyn_c); }; });

  Common ver_c;
  ver_c.seed = 42;
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite; exit 0 iff every criterion passes");
  add_common(ver, ver_c);
  ver->callback([&] {
    action = [&] {
      const auto results = fockent::run_acceptance(ver_c.seed);
      fockent::emit_table(fockent::acceptance_table(results, ver_c.seed),
                          fockent::table_format_from_string(ver_c.format), ver_c.out);
      int failing = 0;
      for (const auto& r : results) {
        std::cerr << fockent::criterion_line(r) << '\n';
        failing += r.passed() ? 0 : 1;
      }
      std::cerr << "verify: " << results.size() - failing << "/" << results.size() << " criteria pass\n";
      return failing == 0 ? 0 : 4;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const fockent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
}
