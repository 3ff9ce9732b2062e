#include "linarg/equations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace linarg {

CoefficientRule CoefficientRule::constant(double value) {
  CoefficientRule r;
  r.kind = Kind::Constant;
  r.value = value;
  return r;
}

CoefficientRule CoefficientRule::periodic(std::vector<double> values) {
  if (values.empty()) throw config_error("periodic rule needs at least one value");
  CoefficientRule r;
  r.kind = Kind::Periodic;
  r.values = std::move(values);
  return r;
}

CoefficientRule CoefficientRule::seeded_random(std::uint64_t seed, double bound) {
  if (bound < 0.0) throw config_error("seeded rule bound must be nonnegative");
  CoefficientRule r;
  r.kind = Kind::SeededRandom;
  r.seed = seed;
  r.bound = bound;
  return r;
}

namespace {

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double CoefficientRule::at(int n) const {
  switch (kind) {
    case Kind::Constant:
      return value;
    case Kind::Periodic:
      return values[static_cast<std::size_t>(((n % static_cast<int>(values.size())) +
                                              static_cast<int>(values.size())) %
                                             static_cast<int>(values.size()))];
    case Kind::SeededRandom: {
      const std::uint64_t h = mix64(seed ^ (0x632be59bd9b4e019ULL +
                                            static_cast<std::uint64_t>(n)));
      const double u = static_cast<double>(h >> 11) * 0x1.0p-53;  // [0,1)
      return (2.0 * u - 1.0) * bound;
    }
  }
  return 0.0;
}

double CoefficientRule::max_magnitude() const {
  switch (kind) {
    case Kind::Constant:
      return std::abs(value);
    case Kind::Periodic: {
      double m = 0.0;
      for (double v : values) m = std::max(m, std::abs(v));
      return m;
    }
    case Kind::SeededRandom:
      return bound;
  }
  return 0.0;
}

std::string to_string(NonlinearityFamily family) {
  switch (family) {
    case NonlinearityFamily::LinearScale: return "linear_scale";
    case NonlinearityFamily::NormSaturated: return "norm_saturated";
    case NonlinearityFamily::PointwiseTanh: return "pointwise_tanh";
    case NonlinearityFamily::PointwiseSin: return "pointwise_sin";
    case NonlinearityFamily::CumulativeIntegral: return "cumulative_integral";
    case NonlinearityFamily::RationalCubic: return "rational_cubic";
  }
  return "?";
}

bool NonlinearitySpec::compatible_with(AlgebraKind kind) const {
  switch (family) {
    case NonlinearityFamily::LinearScale:
    case NonlinearityFamily::NormSaturated:
      return true;
    case NonlinearityFamily::PointwiseTanh:
    case NonlinearityFamily::PointwiseSin:
      return kind == AlgebraKind::Real || kind == AlgebraKind::Grid;
    case NonlinearityFamily::CumulativeIntegral:
      return kind == AlgebraKind::Grid;
    case NonlinearityFamily::RationalCubic:
      return kind == AlgebraKind::Real;
  }
  return false;
}

void NonlinearitySpec::validate(AlgebraKind kind) const {
  if (sigma <= 0.0) throw config_error("nonlinearity sigma must be positive");
  if (!compatible_with(kind))
    throw config_error("nonlinearity family " + to_string(family) +
                       " is not available on the " + to_string(kind) + " algebra");
  const bool sequenced = family == NonlinearityFamily::LinearScale ||
                         family == NonlinearityFamily::PointwiseTanh;
  if (sequenced && rule.max_magnitude() > sigma)
    throw config_error("coefficient sequence bound " +
                       std::to_string(rule.max_magnitude()) +
                       " exceeds declared sigma");
  if (family == NonlinearityFamily::CumulativeIntegral &&
      rule.max_magnitude() > 1.0)
    throw config_error("cumulative_integral multiplier sequence must stay in [-1,1]");
}

namespace {

Element apply_pointwise(const Element& xi, double (*f)(double)) {
  Element r = xi;
  for (double& v : r.data) v = f(v);
  return r;
}

}  // namespace

Element apply_nonlinearity(const NonlinearitySpec& g, const AlgebraContext& ctx,
                           int n, const Element& xi) {
  ctx.check_shape(xi);
  if (!g.compatible_with(ctx.kind()))
    throw config_error("nonlinearity family " + to_string(g.family) +
                       " is not available on the " + to_string(ctx.kind()) +
                       " algebra");
  switch (g.family) {
    case NonlinearityFamily::LinearScale:
      return ctx.scale(g.rule.at(n), xi);
    case NonlinearityFamily::NormSaturated: {
      const double nx = ctx.norm(xi);
      return ctx.scale(g.sigma / std::max(1.0, nx), xi);
    }
    case NonlinearityFamily::PointwiseTanh:
      return ctx.scale(g.rule.at(n), apply_pointwise(xi, std::tanh));
    case NonlinearityFamily::PointwiseSin:
      return ctx.scale(g.sigma, apply_pointwise(xi, std::sin));
    case NonlinearityFamily::CumulativeIntegral: {
      // cumulative trapezoid of phi_n(x(s)) over the uniform grid
      const double c = g.rule.at(n) * g.sigma;
      const int m = ctx.points();
      const double h = 1.0 / (m - 1);
      Element r = ctx.zero();
      double acc = 0.0;
      double prev = c * std::sin(xi.data[0]);
      r.data[0] = 0.0;
      for (int j = 1; j < m; ++j) {
        const double cur = c * std::sin(xi.data[static_cast<std::size_t>(j)]);
        acc += 0.5 * (prev + cur) * h;
        r.data[static_cast<std::size_t>(j)] = acc;
        prev = cur;
      }
      return r;
    }
    case NonlinearityFamily::RationalCubic: {
      const double t = xi.data[0];
      return Element{{g.sigma * t * t * t / (1.0 + t * t)}};
    }
  }
  throw numeric_error("unreachable nonlinearity family");
}

double sigma_spot_check(const NonlinearitySpec& g, const AlgebraContext& ctx,
                        int samples, std::uint64_t seed) {
  if (samples < 1) throw config_error("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> amp(0.1, 10.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Element xi = ctx.scale(amp(rng), ctx.random_element(rng));
    const double nx = ctx.norm(xi);
    if (nx == 0.0) continue;
    const double ng = ctx.norm(apply_nonlinearity(g, ctx, s, xi));
    worst = std::max(worst, ng / nx);
  }
  return worst;
}

void LinearArgEquation::validate() const {
  if (k < 1) throw config_error("equation order parameter k must be >= 1");
  if (a.size() != static_cast<std::size_t>(k + 1) ||
      b.size() != static_cast<std::size_t>(k + 1))
    throw config_error("coefficient lists must have length k+1");
  for (const Element& e : a) ctx.check_shape(e);
  for (const Element& e : b) ctx.check_shape(e);
  if (ctx.is_zero(a.back()) && ctx.is_zero(b.back()))
    throw config_error("trailing coefficients violate a_k != 0 or b_k != 0");
  g.validate(ctx.kind());
}

Element step(const LinearArgEquation& eq, std::span<const Element> history,
             int n) {
  if (history.size() != static_cast<std::size_t>(eq.k + 1))
    throw shape_error("step history must have exactly k+1 elements");
  Element lin = eq.ctx.zero();
  Element arg = eq.ctx.zero();
  for (int i = 0; i <= eq.k; ++i) {
    const Element& h = history[static_cast<std::size_t>(i)];
    lin = eq.ctx.add(lin, eq.ctx.multiply(eq.a[static_cast<std::size_t>(i)], h));
    arg = eq.ctx.add(arg, eq.ctx.multiply(eq.b[static_cast<std::size_t>(i)], h));
  }
  return eq.ctx.add(lin, apply_nonlinearity(eq.g, eq.ctx, n, arg));
}

Trajectory iterate(const LinearArgEquation& eq, std::vector<Element> init,
                   int steps) {
  if (steps < 0) throw config_error("step count must be nonnegative");
  if (init.size() != static_cast<std::size_t>(eq.k + 1))
    throw shape_error("initial values must have exactly k+1 elements");
  for (const Element& e : init) eq.ctx.check_shape(e);

  Trajectory traj;
  traj.k = eq.k;
  traj.values = std::move(init);
  traj.values.reserve(traj.values.size() + static_cast<std::size_t>(steps));
  traj.norms.reserve(traj.values.capacity());
  for (const Element& e : traj.values) traj.norms.push_back(eq.ctx.norm(e));
  traj.mu = *std::max_element(traj.norms.begin(), traj.norms.end());

  std::vector<Element> history(static_cast<std::size_t>(eq.k + 1), eq.ctx.zero());
  for (int n = 0; n < steps; ++n) {
    // history newest first: x_n, x_{n-1}, ..., x_{n-k}
    const std::size_t top = traj.values.size() - 1;
    for (int i = 0; i <= eq.k; ++i)
      history[static_cast<std::size_t>(i)] = traj.values[top - static_cast<std::size_t>(i)];
    Element next = step(eq, history, n);
    const double nn = eq.ctx.norm(next);
    traj.values.push_back(std::move(next));
    traj.norms.push_back(nn);
    if (nn > kDivergenceBound) {
      traj.diverged = true;
      break;
    }
  }
  return traj;
}

EnvelopeReport envelope_check(const Trajectory& traj, double alpha, double tol) {
  if (alpha <= 0.0 || alpha >= 1.0)
    throw config_error("envelope rate alpha must lie in (0,1)");
  EnvelopeReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  const int kk = traj.k;
  for (int n = 1; n <= traj.steps(); ++n) {
    const double bound =
        std::pow(alpha, static_cast<double>(n) / (kk + 1)) * traj.mu + tol;
    const double margin = bound - traj.norm_at(n);
    if (margin < report.worst_margin) report.worst_margin = margin;
    if (margin < 0.0 && report.first_violation < 0) {
      report.holds = false;
      report.first_violation = n;
    }
  }
  return report;
}

}  // namespace linarg
