#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linarg/equations.hpp"

namespace linarg {

// A worked equation together with its closed-form factorization root.
struct ScenarioEquation {
  LinearArgEquation eq;
  Element rho;
};

// x_{n+1} = a x_n + alpha_n tanh(x_n - a^k x_{n-k}) on the reals, with
// |alpha_n| bounded by sigma. Root rho = a.
ScenarioEquation make_dham(double a, int k, double sigma,
                           CoefficientRule alpha_rule);

// The C[0,1] integral equation on an m-point grid:
//   a_0(r) = alpha r/(r+1), a_1(r) = beta(beta - alpha r)/(r+1)^2,
//   argument x_n - [beta/(r+1)] x_{n-1},
//   g_n(x)(r) = int_0^r phi_n(x(s)) ds with phi_n(t) = m_n sigma sin t.
// Requires 0 < beta < 1, 3 beta <= alpha < 2 + beta,
// sigma < (2 + beta - alpha)/2. Root rho(r) = beta/(r+1).
ScenarioEquation make_c01(double alpha, double beta, double sigma, int m,
                          CoefficientRule phi_rule);

// x_{n+1} = a x_n + b(b-a) x_{n-1} + sigma tanh(x_n - b x_{n-1}) with
// sigma > 0, 0 < b < 1, a < b. Root rho = b.
ScenarioEquation make_th(double a, double b, double sigma);

// The factor map h(xi) = (a-b) xi + sigma tanh(xi).
double h_map(double a, double b, double sigma, double xi);

enum class Regime {
  GlobalConvergence,  // b-1 <= a < b
  LocalBasin,         // b-sigma-1 < a < b-1; 2-cycle {-tau, tau}
  RepellingOrigin,    // a <= b-sigma-1
  Invalid,            // a >= b
};

std::string to_string(Regime regime);

Regime classify_regime(double a, double b, double sigma);

// Positive solution of h(tau) = -tau, i.e. sigma tanh(tau) = (b-a-1) tau,
// by bracketed bisection. None outside the local-basin band.
std::optional<double> find_tau(double a, double b, double sigma, double tol);

enum class ProbeResult { Converged, Diverged, Undecided };

std::string to_string(ProbeResult r);

// Iterates t_{n+1} = h(t_n) from t0: converged when |t_n| < 1e-9, diverged
// when |t_n| > bound, undecided after max_steps.
ProbeResult basin_probe(double a, double b, double sigma, double t0,
                        int max_steps, double bound = 1e6);

struct ScanRow {
  double a = 0.0;
  bool valid = false;  // a < b required
  bool sig_ok = false; // sigma < 1 - a + b
  Regime regime = Regime::Invalid;
  std::optional<double> tau;
};

struct BifurcationScan {
  double b = 0.0;
  double sigma = 0.0;
  std::vector<ScanRow> rows;
};

BifurcationScan bifurcation_scan(double b, double sigma, double a_min,
                                 double a_max, int steps);

}  // namespace linarg
