// Acceptance harness: one pass/fail line per criterion, nonzero exit on
// any failure. Criterion 8 drives the installed CLI binary end to end.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linarg/algebra.hpp"
#include "linarg/config.hpp"
#include "linarg/equations.hpp"
#include "linarg/reduction.hpp"
#include "linarg/scenarios.hpp"
#include "linarg/stability.hpp"

using namespace linarg;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Element> reals(std::vector<double> vs) {
  std::vector<Element> out;
  for (double v : vs) out.push_back(Element{{v}});
  return out;
}

std::vector<Element> random_init(const AlgebraContext& ctx, int count,
                                 std::mt19937_64& rng, double scale = 1.0) {
  std::vector<Element> out;
  for (int i = 0; i < count; ++i)
    out.push_back(ctx.scale(scale, ctx.random_element(rng)));
  return out;
}

// --- criterion 1: algebra axioms -----------------------------------------

void criterion_axioms() {
  const auto start = Clock::now();
  double worst_others = 0.0;
  worst_others = std::max(worst_others, check_axioms(AlgebraContext::real(), 1000, 101).worst());
  worst_others = std::max(worst_others, check_axioms(AlgebraContext::complex(), 1000, 102).worst());
  worst_others = std::max(worst_others, check_axioms(AlgebraContext::grid(101), 1000, 104).worst());
  const double worst_matrix = check_axioms(AlgebraContext::matrix(4), 1000, 103).worst();
  const double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "worst matrix " << worst_matrix << ", worst others " << worst_others
         << ", " << elapsed << " s";
  report(1, "algebra axioms on all four instances",
         worst_matrix <= 1e-10 && worst_others <= 1e-12 && elapsed < 5.0,
         detail.str());
}

// --- criterion 2: envelope over random contractive equations -------------

LinearArgEquation random_contractive(const AlgebraContext& ctx,
                                     std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick_k(1, 4);
  std::uniform_real_distribution<double> pick_sigma(0.2, 0.8);
  std::uniform_real_distribution<double> pick_alpha(0.3, 0.95);
  const int k = pick_k(rng);
  const double sigma = pick_sigma(rng);

  LinearArgEquation eq{ctx, k, {}, {},
                       NonlinearitySpec{NonlinearityFamily::NormSaturated, sigma,
                                        CoefficientRule::constant(0.0)}};
  for (int i = 0; i <= k; ++i) {
    eq.a.push_back(ctx.random_element(rng));
    eq.b.push_back(ctx.random_element(rng));
  }
  // rescale both coefficient lists so alpha_direct lands in (0.3, 0.95)
  const double target = pick_alpha(rng);
  const double c = target / alpha_direct(eq);
  for (Element& e : eq.a) e = ctx.scale(c, e);
  for (Element& e : eq.b) e = ctx.scale(c, e);
  eq.validate();
  return eq;
}

void criterion_envelope() {
  const auto start = Clock::now();
  const std::vector<AlgebraContext> algebras{
      AlgebraContext::real(), AlgebraContext::complex(),
      AlgebraContext::matrix(3), AlgebraContext::grid(51)};
  std::mt19937_64 rng(202);
  int violations = 0;
  double worst_margin = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const AlgebraContext& ctx = algebras[trial % algebras.size()];
    LinearArgEquation eq = random_contractive(ctx, rng);
    const double alpha = alpha_direct(eq);
    Trajectory traj = iterate(eq, random_init(ctx, eq.k + 1, rng, 2.0), 300);
    EnvelopeReport env = envelope_check(traj, alpha, 1e-9);
    if (!env.holds) ++violations;
    worst_margin = std::min(worst_margin, env.worst_margin);
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "100 equations, " << violations << " violations, worst margin "
         << worst_margin << ", " << elapsed << " s";
  report(2, "norm envelope |x_n| <= alpha^{n/(k+1)} mu", violations == 0 && elapsed < 30.0,
         detail.str());
}

// --- criterion 3: split consistency across the worked scenarios ----------

void criterion_split() {
  double worst = 0.0;
  std::mt19937_64 rng(303);

  ScenarioEquation dham = make_dham(0.5, 2, 0.6, CoefficientRule::seeded_random(31, 0.6));
  for (int t = 0; t < 10; ++t)
    worst = std::max(worst, split_consistency_check(
                                dham.eq, dham.rho,
                                random_init(dham.eq.ctx, 3, rng, 2.0), 100, 1e-9));

  const double b = 0.4, a0 = 0.5;
  LinearArgEquation gla2{AlgebraContext::real(), 1,
                         reals({a0, b * b - a0 * b}), reals({1.0, -b}),
                         NonlinearitySpec{NonlinearityFamily::PointwiseTanh, 0.5,
                                          CoefficientRule::seeded_random(32, 0.5)}};
  for (int t = 0; t < 10; ++t)
    worst = std::max(worst, split_consistency_check(
                                gla2, Element{{b}},
                                random_init(gla2.ctx, 2, rng, 3.0), 100, 1e-9));

  ScenarioEquation c01 = make_c01(1.5, 0.5, 0.4, 101, CoefficientRule::seeded_random(33, 1.0));
  for (int t = 0; t < 10; ++t)
    worst = std::max(worst, split_consistency_check(
                                c01.eq, c01.rho,
                                random_init(c01.eq.ctx, 2, rng), 100, 1e-9));

  AlgebraContext mat = AlgebraContext::matrix(2);
  LinearArgEquation gla1{mat, 1,
                         {mat.constant(a0), mat.constant(b * b - a0 * b)},
                         {mat.identity(), mat.constant(-b)},
                         NonlinearitySpec{NonlinearityFamily::NormSaturated, 0.3,
                                          CoefficientRule::constant(0.0)}};
  double worst_matrix = 0.0;
  for (int t = 0; t < 10; ++t)
    worst_matrix = std::max(worst_matrix,
                            split_consistency_check(gla1, mat.constant(b),
                                                    random_init(mat, 2, rng),
                                                    100, 1e-8));
  worst = std::max(worst, worst_matrix);

  std::ostringstream detail;
  detail << "max deviation " << worst << " incl. matrix " << worst_matrix;
  report(3, "direct-vs-factored two-path equivalence", worst <= 1e-8, detail.str());
}

// --- criterion 4: factored bound extends the direct one ------------------

void criterion_range_extension() {
  ScenarioEquation dham = make_dham(0.5, 2, 0.6, CoefficientRule::seeded_random(41, 0.6));
  const double direct = alpha_direct(dham.eq);
  StabilityReport rep = check_theorem1(dham.eq, dham.rho, 1e-9);
  const bool bounds_ok = std::abs(direct - 1.25) <= 1e-12 && !rep.direct_holds &&
                         rep.alpha_factored_value &&
                         std::abs(*rep.alpha_factored_value - 0.9) <= 1e-12 &&
                         rep.verdict == Verdict::Theorem1b;

  std::mt19937_64 rng(404);
  int converged = 0;
  for (int t = 0; t < 20; ++t) {
    Trajectory traj = iterate(dham.eq, random_init(dham.eq.ctx, 3, rng, 3.0), 500);
    bool ok = false;
    for (double n : traj.norms)
      if (n < 1e-6) { ok = true; break; }
    if (!traj.diverged && ok) ++converged;
  }
  std::ostringstream detail;
  detail << "alpha_direct " << direct << ", alpha_factored "
         << (rep.alpha_factored_value ? *rep.alpha_factored_value : -1.0)
         << ", " << converged << "/20 trajectories below 1e-6";
  report(4, "dham: direct bound fails, factored bound certifies",
         bounds_ok && converged == 20, detail.str());
}

// --- criterion 5: the C[0,1] integral equation ---------------------------

void criterion_c01() {
  const auto start = Clock::now();
  ScenarioEquation c01 = make_c01(1.5, 0.5, 0.4, 101, CoefficientRule::seeded_random(51, 1.0));
  CorollaryReport cor = check_corollary2(c01.eq, 1e-9);

  std::mt19937_64 rng(505);
  int converged = 0;
  for (int t = 0; t < 10; ++t) {
    Trajectory traj = iterate(c01.eq, random_init(c01.eq.ctx, 2, rng), 500);
    bool ok = false;
    for (double n : traj.norms)
      if (n < 1e-6) { ok = true; break; }
    if (!traj.diverged && ok) ++converged;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream detail;
  detail << "sum " << cor.sum << " < limit " << cor.limit << ", " << converged
         << "/10 pairs converged, " << elapsed << " s";
  report(5, "C[0,1] example certified by the root-at-b criterion",
         cor.holds && std::abs(cor.sum - 0.5) <= 1e-12 &&
             std::abs(cor.limit - 0.6) <= 1e-12 && converged == 10 &&
             elapsed < 10.0,
         detail.str());
}

// --- criterion 6: bifurcation of the factor map --------------------------

std::optional<double> tau_sign_scan(double a, double b, double sigma, double step) {
  for (double tau = step; tau < 50.0; tau += step)
    if (sigma * std::tanh(tau) - (b - a - 1.0) * tau <= 0.0)
      return tau - 0.5 * step;
  return std::nullopt;
}

void criterion_bifurcation() {
  const double b = 0.5, sigma = 1.2;
  const bool boundaries_ok =
      classify_regime(-0.5, b, sigma) == Regime::GlobalConvergence &&
      classify_regime(-0.5 - 1e-9, b, sigma) == Regime::LocalBasin &&
      classify_regime(-1.7 + 1e-9, b, sigma) == Regime::LocalBasin &&
      classify_regime(-1.7, b, sigma) == Regime::RepellingOrigin;

  auto tau = find_tau(-1.0, b, sigma, 1e-10);
  auto oracle = tau_sign_scan(-1.0, b, sigma, 1e-5);
  bool tau_ok = tau && oracle && std::abs(*tau - *oracle) <= 1e-4;
  const double cycle_residual =
      tau ? std::abs(h_map(-1.0, b, sigma, h_map(-1.0, b, sigma, *tau)) - *tau)
          : 1.0;
  tau_ok = tau_ok && cycle_residual <= 1e-5;

  bool probes_ok =
      tau && basin_probe(-1.0, b, sigma, *tau / 2.0, 200000) == ProbeResult::Converged &&
      basin_probe(-1.0, b, sigma, -*tau / 2.0, 200000) == ProbeResult::Converged &&
      basin_probe(-1.0, b, sigma, 2.0 * *tau, 200000) == ProbeResult::Diverged &&
      basin_probe(-1.0, b, sigma, -2.0 * *tau, 200000) == ProbeResult::Diverged;

  BifurcationScan scan = bifurcation_scan(b, sigma, -1.69, -0.51, 60);
  bool monotone = true;
  std::optional<double> prev;
  for (const ScanRow& row : scan.rows) {
    if (!row.tau) { monotone = false; break; }
    if (prev && *row.tau < *prev - 1e-9) monotone = false;
    prev = row.tau;
  }

  std::ostringstream detail;
  detail << "tau " << (tau ? *tau : -1.0) << ", cycle residual "
         << cycle_residual;
  report(6, "2-cycle bifurcation bands, amplitude, and basin probes",
         boundaries_ok && tau_ok && probes_ok && monotone, detail.str());
}

// --- criterion 7: convergence beyond the contraction range ---------------

void criterion_non_contraction() {
  ScenarioEquation th = make_th(-0.3, 0.5, 1.1);
  std::mt19937_64 rng(707);
  int converged = 0;
  for (int t = 0; t < 10; ++t) {
    Trajectory traj = iterate(th.eq, random_init(th.eq.ctx, 2, rng, 5.0), 5000);
    if (!traj.diverged && traj.norms.back() < 1e-6) ++converged;
  }
  report(7, "convergence with sigma >= 1 (no local contraction)",
         converged == 10,
         std::to_string(converged) + "/10 pairs below 1e-6");
}

// --- criterion 8: CLI determinism ----------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool identical_runs(const std::string& args, const std::string& out_a,
                    const std::string& out_b) {
  const std::string cli = LINARG_CLI_PATH;
  auto run = [&](const std::string& out) {
    const std::string cmd =
        "\"" + cli + "\" " + args + " --out " + out + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  if (run(out_a) != 0 || run(out_b) != 0) return false;
  const std::string body = slurp(out_a);
  const bool same = !body.empty() && body == slurp(out_b);
  std::remove(out_a.c_str());
  std::remove(out_b.c_str());
  return same;
}

void criterion_determinism() {
  const char* config = R"({
    "equation": {"shape": "dham", "a": 0.5, "k": 2, "sigma": 0.6,
                 "rule": {"type": "random", "seed": 13, "bound": 0.6}},
    "init": {"random_count": 3},
    "horizon": 120,
    "seed": 99
  })";
  std::ofstream("acceptance_cli.json") << config;
  std::ofstream("acceptance_scan.json") << R"({
    "scan": {"b": 0.5, "sigma": 1.2, "a_min": -2.0, "a_max": 0.4, "steps": 121}
  })";

  const bool sim_ok = identical_runs(
      "simulate --config acceptance_cli.json --format json", "acc_sim_a.json",
      "acc_sim_b.json");
  const bool reduce_ok = identical_runs(
      "reduce --config acceptance_cli.json", "acc_red_a.json", "acc_red_b.json");
  const bool check_ok = identical_runs(
      "check --config acceptance_cli.json", "acc_chk_a.json", "acc_chk_b.json");
  const bool scan_ok = identical_runs(
      "scan --config acceptance_scan.json", "acc_scan_a.csv", "acc_scan_b.csv");
  std::remove("acceptance_cli.json");
  std::remove("acceptance_scan.json");

  std::ostringstream detail;
  detail << "simulate " << sim_ok << ", reduce " << reduce_ok << ", check "
         << check_ok << ", scan " << scan_ok;
  report(8, "byte-identical artifacts on repeated CLI runs",
         sim_ok && reduce_ok && check_ok && scan_ok, detail.str());
}

}  // namespace

int main() {
  criterion_axioms();
  criterion_envelope();
  criterion_split();
  criterion_range_extension();
  criterion_c01();
  criterion_bifurcation();
  criterion_non_contraction();
  criterion_determinism();
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
