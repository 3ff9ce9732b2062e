#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linarg/algebra.hpp"

namespace linarg {

// Iteration halts and the trajectory is flagged diverged once any norm
// exceeds this bound.
inline constexpr double kDivergenceBound = 1e12;

// Per-step scalar coefficient sequence (the c_n / alpha_n in the
// nonlinearity catalog). Deterministic random access for any n.
struct CoefficientRule {
  enum class Kind { Constant, Periodic, SeededRandom };

  static CoefficientRule constant(double value);
  static CoefficientRule periodic(std::vector<double> values);
  // Values uniform in [-bound, bound], derived from (seed, n) so access
  // order does not matter.
  static CoefficientRule seeded_random(std::uint64_t seed, double bound);

  double at(int n) const;
  // Largest |value| the rule can produce.
  double max_magnitude() const;

  Kind kind = Kind::Constant;
  double value = 0.0;
  std::vector<double> values;
  std::uint64_t seed = 0;
  double bound = 0.0;
};

enum class NonlinearityFamily {
  LinearScale,         // g_n(xi) = c_n * xi, |c_n| <= sigma
  NormSaturated,       // g_n(xi) = sigma * xi / max(1, |xi|)
  PointwiseTanh,       // g_n(xi) = alpha_n * tanh(xi) per sample; real/grid
  PointwiseSin,        // g_n(xi) = sigma * sin(xi) per sample; real/grid
  CumulativeIntegral,  // g_n(x)(r) = int_0^r phi_n(x(s)) ds; grid only
  RationalCubic,       // g_n(t) = sigma * t^3 / (1 + t^2); real only
};

std::string to_string(NonlinearityFamily family);

// A catalog nonlinearity sequence g_n with its declared bound sigma:
// |g_n(xi)| <= sigma |xi| holds by construction for every family.
struct NonlinearitySpec {
  NonlinearityFamily family = NonlinearityFamily::NormSaturated;
  double sigma = 0.0;
  // PointwiseTanh: the alpha_n sequence (|alpha_n| <= sigma required).
  // LinearScale: the c_n sequence. CumulativeIntegral: per-step multiplier
  // m_n in [-1,1] on phi_n(t) = m_n * sigma * sin t. Unused otherwise.
  CoefficientRule rule = CoefficientRule::constant(0.0);

  void validate(AlgebraKind kind) const;
  bool compatible_with(AlgebraKind kind) const;
};

// g_n(xi). Throws config_error when the family does not apply to the
// context kind.
Element apply_nonlinearity(const NonlinearitySpec& g, const AlgebraContext& ctx,
                           int n, const Element& xi);

// Max over random xi of |g_n(xi)| / |xi|; should not exceed sigma.
double sigma_spot_check(const NonlinearitySpec& g, const AlgebraContext& ctx,
                        int samples, std::uint64_t seed);

// x_{n+1} = sum a_i x_{n-i} + g_n(sum b_i x_{n-i}), order k+1.
struct LinearArgEquation {
  AlgebraContext ctx;
  int k = 1;
  std::vector<Element> a;  // a_0..a_k
  std::vector<Element> b;  // b_0..b_k
  NonlinearitySpec g;

  // Shape checks plus the trailing-coefficient requirement
  // "a_k != 0 or b_k != 0".
  void validate() const;
};

struct Trajectory {
  int k = 0;
  // x_{-k}..x_N, oldest first; values[k + n] is x_n.
  std::vector<Element> values;
  std::vector<double> norms;
  double mu = 0.0;  // max of the k+1 initial norms
  bool diverged = false;

  int steps() const { return static_cast<int>(values.size()) - (k + 1); }
  const Element& at(int n) const { return values[static_cast<std::size_t>(k + n)]; }
  double norm_at(int n) const { return norms[static_cast<std::size_t>(k + n)]; }
};

// history is newest first: history[i] = x_{n-i}, i = 0..k.
Element step(const LinearArgEquation& eq, std::span<const Element> history,
             int n);

// init is x_{-k}..x_0 oldest first. Halts early when a norm exceeds
// kDivergenceBound.
Trajectory iterate(const LinearArgEquation& eq, std::vector<Element> init,
                   int steps);

struct EnvelopeReport {
  bool holds = true;
  // min over n of bound - |x_n|; negative when violated
  double worst_margin = 0.0;
  int first_violation = -1;  // step index n, or -1
};

// Verifies |x_n| <= alpha^{n/(k+1)} mu + tol for all n >= 1.
EnvelopeReport envelope_check(const Trajectory& traj, double alpha,
                              double tol = 1e-9);

}  // namespace linarg
