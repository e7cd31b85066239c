// Command-line front end: run Grover searches with both engines (rotor
// precession and statevector), solve exact-search phases, and sweep the
// cross-engine invariants.
//
// Subcommands:
//   simulate  run one search and write the trajectory (csv or json)
//   phase     print the derived search parameters for (N, M)
//   validate  run the invariant families; exit 0 iff all pass

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grover/io.hpp"
#include "grover/search.hpp"
#include "grover/statevector.hpp"
#include "grover/su2.hpp"

using namespace grover;

namespace {

std::string fmt(double v) { return io::format_double(v); }

double to_radians(double v, bool degrees) { return degrees ? v * kPi / 180.0 : v; }

struct SimulateOptions {
  std::size_t n = 0, m = 0;
  std::string mode = "standard";
  std::optional<double> phi1, phi2, theta0, phi0;
  std::optional<long> steps;
  std::string format = "csv";
  std::string out;
  bool degrees = false;
};

int cmd_simulate(const SimulateOptions& opt) {
  if (opt.mode != "standard" && opt.mode != "exact" && opt.mode != "general") {
    std::cerr << "error: --mode must be standard, exact or general\n";
    return 1;
  }
  if (opt.mode == "exact" && (opt.phi1 || opt.phi2)) {
    std::cerr << "error: exact mode derives phi; use standard mode to set phases manually\n";
    return 1;
  }
  if (opt.mode == "general" && !opt.theta0) {
    std::cerr << "error: general mode requires --theta0\n";
    return 1;
  }

  SearchSpec spec(opt.n, opt.m,
                  to_radians(opt.phi1.value_or(kPi), opt.degrees && opt.phi1.has_value()),
                  to_radians(opt.phi2.value_or(kPi), opt.degrees && opt.phi2.has_value()));
  const double theta = spec.theta();

  std::optional<double> solved_phi;
  long km = k_min(theta);
  if (opt.mode == "exact") {
    if (opt.steps) km = *opt.steps;
    solved_phi = solve_exact_phase(theta, static_cast<int>(km));
    spec.phi1 = spec.phi2 = *solved_phi;
  }
  if (opt.mode == "general") {
    spec = spec.with_start(to_radians(*opt.theta0, opt.degrees),
                           to_radians(opt.phi0.value_or(0.0), opt.degrees));
  }

  const long steps = opt.mode == "exact" ? km : opt.steps.value_or(km);
  const Trajectory traj = run_trajectory(spec, steps);

  // brute-force engine: uniform start for standard/exact; a general start
  // uses its own gamma state, with the diffusion taken about it
  const auto sol = sv::SolutionSet::first(opt.m, opt.n);
  double final_sv = 0.0;
  if (spec.start_theta0) {
    const su2::OverlapGeometry g = su2::overlap_from_counts(opt.n, opt.m);
    const su2::WeightSpinor gamma_plane = su2::weight_to_m_basis(
        g, su2::general_start_spinor(*spec.start_theta0, spec.start_phi0.value_or(0.0)));
    const sv::StateVector gamma_state =
        sv::state_in_plane(sol, gamma_plane.up, gamma_plane.down);
    sv::StateVector s = gamma_state;
    for (long k = 0; k < steps; ++k) {
      s = sv::general_grover_step(s, sol, spec.phi1, spec.phi2, gamma_state);
    }
    final_sv = sv::success_probability(s, sol);
  } else {
    final_sv = sv::run_search(opt.n, sol, spec.phi1, spec.phi2, steps).back();
  }

  std::cout << "theta = " << fmt(theta) << "\n";
  std::cout << "k_optimal = " << fmt(iterations_standard(theta)) << "\n";
  std::cout << "k_m = " << km << "\n";
  if (solved_phi) std::cout << "phi = " << fmt(*solved_phi) << "\n";
  std::cout << "steps = " << steps << "\n";
  std::cout << "final_success_ga = " << fmt(traj.points.back().success_prob) << "\n";
  std::cout << "final_success_sv = " << fmt(final_sv) << "\n";
  std::cout << "success_abs_diff = " << fmt(std::abs(traj.points.back().success_prob - final_sv))
            << "\n";

  std::string path = opt.out;
  if (path.empty()) path = opt.format == "json" ? "trajectory.json" : "trajectory.csv";
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  const auto records = io::records_from(traj);
  if (opt.format == "json") {
    io::write_json(file, records);
  } else {
    io::write_csv(file, records);
  }
  std::cout << "trajectory written to " << path << " (" << records.size() << " points)\n";
  return 0;
}

int cmd_phase(std::size_t n, std::size_t m, std::optional<long> k) {
  const SearchSpec spec(n, m);
  const double theta = spec.theta();
  const long km = k.value_or(k_min(theta));
  const double phi = solve_exact_phase(theta, static_cast<int>(km));
  const PrecessionAxis ax = phase_matched_axis(theta, phi);
  const cl3::Vector3 axis = ax.axis();

  std::cout << "theta = " << fmt(theta) << "\n";
  std::cout << "k_real = " << fmt(iterations_standard(theta)) << "\n";
  std::cout << "k_m = " << km << "\n";
  std::cout << "phi = " << fmt(phi) << "\n";
  std::cout << "beta = " << fmt(ax.beta_rot) << "\n";
  std::cout << "axis_alpha = " << fmt(ax.axis_alpha) << "\n";
  std::cout << "axis = (" << fmt(axis.x) << ", " << fmt(axis.y) << ", " << fmt(axis.z)
            << ")\n";
  // the search rotor itself, in blade order 1,e1,e2,e3,e12,e13,e23,e123
  std::cout << "rotor = "
            << io::multivector_to_json(exact_rotor(theta, phi, phi).to_multivector()).dump()
            << "\n";
  return 0;
}

struct Family {
  std::string name;
  double tol;
  double worst = 0.0;
  long checks = 0;

  void track(double residual) {
    worst = std::max(worst, residual);
    ++checks;
  }
  bool pass() const { return worst <= tol; }
};

void report(const Family& f) {
  std::cout << "family=" << f.name << " checks=" << f.checks << " worst=" << fmt(f.worst)
            << " tol=" << fmt(f.tol) << " status=" << (f.pass() ? "pass" : "FAIL") << "\n";
}

int cmd_validate(std::size_t max_n, std::uint64_t seed) {
  std::optional<double> tol_override;
  if (const char* env = std::getenv("GA_GROVER_TOLERANCE_OVERRIDE")) {
    tol_override = std::stod(env);
    std::cout << "# tolerance override in effect: " << fmt(*tol_override) << "\n";
  }
  auto tol = [&](double v) { return tol_override.value_or(v); };
  std::mt19937_64 gen(seed);

  std::vector<Family> families;

  {
    Family f{"cl3_properties", tol(1e-12)};
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_mv = [&]() {
      cl3::Multivector m;
      for (double& v : m.c) v = comp(gen);
      return m;
    };
    auto random_rotor = [&]() {
      cl3::Vector3 v{gauss(gen), gauss(gen), gauss(gen)};
      v = v * (1.0 / cl3::norm(v));
      return cl3::exp_bivector(cl3::dual(v) * angle(gen));
    };
    for (int trial = 0; trial < 1000; ++trial) {
      const cl3::Multivector a = random_mv(), b = random_mv(), c = random_mv();
      f.track(cl3::norm((a * b) * c - a * (b * c)));
      f.track(cl3::norm(cl3::reverse(a * b) - cl3::reverse(b) * cl3::reverse(a)));
      f.track((random_rotor() * random_rotor()).norm_drift());
    }
    families.push_back(f);
  }

  {
    Family f{"su2_relations", tol(1e-12)};
    std::uniform_int_distribution<std::size_t> nd(2, std::max<std::size_t>(max_n, 4));
    std::uniform_real_distribution<double> dd(-kPi, kPi);
    const su2::cplx i(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = nd(gen);
      std::uniform_int_distribution<std::size_t> md(1, n - 1);
      const su2::OverlapGeometry g = su2::overlap_from_counts(n, md(gen), dd(gen));
      const su2::Generators gens = su2::build_generators(g);
      const su2::Mat2c J[3] = {gens.J1, gens.J2, gens.J3};
      f.track(su2::max_abs(su2::commutator(J[0], J[1]) - i * J[2]));
      f.track(su2::max_abs(su2::commutator(J[1], J[2]) - i * J[0]));
      f.track(su2::max_abs(su2::commutator(J[2], J[0]) - i * J[1]));
      for (const su2::Mat2c& j : J) f.track(su2::max_abs(su2::commutator(gens.K, j)));
      for (const su2::Mat2c& j : J) f.track(su2::max_abs(j * j - 0.25 * gens.P));
      f.track(su2::max_abs(gens.J1 * gens.J1 + gens.J2 * gens.J2 + gens.J3 * gens.J3 -
                           0.75 * gens.P));
      const su2::WeightStates w = su2::weight_states(g);
      const su2::WeightSpinor j3up = su2::apply(gens.J3, w.up);
      f.track(std::abs(j3up.up - 0.5 * w.up.up) + std::abs(j3up.down - 0.5 * w.up.down));
      f.track(su2::norm(su2::apply(su2::j_plus(gens), w.up)));
    }
    families.push_back(f);
  }

  {
    Family f{"oracle_equivalence", tol(1e-10)};
    for (std::size_t n = 4; n <= max_n; ++n) {
      for (std::size_t m = 1; m < n; ++m) {
        const SearchSpec spec(n, m);
        const long steps = 2 * k_min(spec.theta());
        const Trajectory t = run_trajectory(spec, steps);
        const auto probs =
            sv::run_search(n, sv::SolutionSet::first(m, n), kPi, kPi, steps);
        for (long k = 0; k <= steps; ++k) {
          f.track(std::abs(t.points[static_cast<std::size_t>(k)].success_prob -
                           probs[static_cast<std::size_t>(k)]));
        }
      }
    }
    families.push_back(f);
  }

  {
    Family f{"phase_minimum_scan", tol(1e-12)};
    std::uniform_real_distribution<double> td(0.02, kPi - 0.02);
    for (int trial = 0; trial < 20; ++trial) {
      const double theta = td(gen);
      const double at_pi = iterations_for_phase(theta, kPi);
      for (int i = 1; i <= 100; ++i) {
        f.track(std::max(0.0, at_pi - iterations_for_phase(theta, kPi * i / 100.0)));
      }
    }
    families.push_back(f);
  }

  {
    Family f{"exact_certainty", tol(1e-9)};
    std::uniform_int_distribution<std::size_t> nd(4, std::max<std::size_t>(max_n, 4));
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = nd(gen);
      std::uniform_int_distribution<std::size_t> md(1, n - 1);
      const std::size_t m = md(gen);
      const double theta = SearchSpec(n, m).theta();
      const int km = k_min(theta);
      const double phi = solve_exact_phase(theta, km);
      const auto probs = sv::run_search(n, sv::SolutionSet::first(m, n), phi, phi, km);
      f.track(std::abs(1.0 - probs.back()));
    }
    families.push_back(f);
  }

  {
    Family f{"reduction_chain", tol(1e-12)};
    std::uniform_real_distribution<double> td(0.02, kPi - 0.02);
    auto gap = [](const cl3::Rotor& a, const cl3::Rotor& b) {
      return std::max(std::max(std::abs(a.s - b.s), std::abs(a.b12 - b.b12)),
                      std::max(std::abs(a.b13 - b.b13), std::abs(a.b23 - b.b23)));
    };
    for (int trial = 0; trial < 200; ++trial) {
      const double theta = td(gen);
      f.track(gap(exact_rotor(theta, kPi, kPi), standard_rotor(theta)));
      const cl3::Rotor general =
          start_rotor(general_start_vector(theta, 0.0), kPi) * oracle_rotor(theta, kPi);
      f.track(gap(general, standard_rotor(theta)));
    }
    families.push_back(f);
  }

  int failures = 0;
  for (const Family& f : families) {
    report(f);
    if (!f.pass()) ++failures;
  }
  std::cout << (failures == 0 ? "all families pass" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search in the geometric algebra of three-space"};
  app.require_subcommand(1);

  SimulateOptions sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run one search, write the trajectory");
  simulate->add_option("--n", sim.n, "database size N")->required();
  simulate->add_option("--m", sim.m, "number of solutions M")->required();
  simulate->add_option("--mode", sim.mode, "standard | exact | general");
  double phi1 = 0.0, phi2 = 0.0, theta0 = 0.0, phi0 = 0.0;
  long steps = 0;
  CLI::Option* o_phi1 = simulate->add_option("--phi1", phi1, "diffusion phase (radians)");
  CLI::Option* o_phi2 = simulate->add_option("--phi2", phi2, "oracle phase (radians)");
  CLI::Option* o_theta0 = simulate->add_option("--theta0", theta0, "general start polar angle");
  CLI::Option* o_phi0 = simulate->add_option("--phi0", phi0, "general start azimuth");
  CLI::Option* o_steps = simulate->add_option("--steps", steps, "iteration count");
  simulate->add_option("--format", sim.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->add_option("--out", sim.out, "output path (default trajectory.<format>)");
  simulate->add_flag("--degrees", sim.degrees, "angles given in degrees");

  std::size_t phase_n = 0, phase_m = 0;
  long phase_k = 0;
  CLI::App* phase = app.add_subcommand("phase", "print derived search parameters");
  phase->add_option("--n", phase_n, "database size N")->required();
  phase->add_option("--m", phase_m, "number of solutions M")->required();
  CLI::Option* o_k = phase->add_option("--k", phase_k, "iteration count (default k_m)");

  std::size_t validate_n = 64;
  std::uint64_t seed = 1;
  CLI::App* validate = app.add_subcommand("validate", "run the invariant families");
  validate->add_option("--n", validate_n, "largest database size in the sweep (>= 4)")
      ->check(CLI::Range(std::size_t{4}, std::size_t{100000}));
  validate->add_option("--seed", seed, "seed for the sampled families");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      if (*o_phi1) sim.phi1 = phi1;
      if (*o_phi2) sim.phi2 = phi2;
      if (*o_theta0) sim.theta0 = theta0;
      if (*o_phi0) sim.phi0 = phi0;
      if (*o_steps) sim.steps = steps;
      return cmd_simulate(sim);
    }
    if (phase->parsed()) {
      return cmd_phase(phase_n, phase_m, *o_k ? std::optional<long>(phase_k) : std::nullopt);
    }
    if (validate->parsed()) {
      return cmd_validate(validate_n, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
