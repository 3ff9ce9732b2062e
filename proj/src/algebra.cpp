#include "linarg/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace linarg {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Real: return "real";
    case AlgebraKind::Complex: return "complex";
    case AlgebraKind::Matrix: return "matrix";
    case AlgebraKind::Grid: return "grid";
  }
  return "?";
}

AlgebraContext AlgebraContext::real() { return {AlgebraKind::Real, 1}; }
AlgebraContext AlgebraContext::complex() { return {AlgebraKind::Complex, 1}; }

AlgebraContext AlgebraContext::matrix(int dim) {
  if (dim < 1) throw config_error("matrix dimension must be >= 1");
  return {AlgebraKind::Matrix, dim};
}

AlgebraContext AlgebraContext::grid(int points) {
  if (points < 2) throw config_error("grid point count must be >= 2");
  return {AlgebraKind::Grid, points};
}

std::size_t AlgebraContext::payload_size() const {
  switch (kind_) {
    case AlgebraKind::Real: return 1;
    case AlgebraKind::Complex: return 2;
    case AlgebraKind::Matrix: return static_cast<std::size_t>(dim_) * dim_;
    case AlgebraKind::Grid: return static_cast<std::size_t>(dim_);
  }
  return 0;
}

bool AlgebraContext::same_as(const AlgebraContext& other) const {
  return kind_ == other.kind_ && dim_ == other.dim_;
}

void AlgebraContext::check_shape(const Element& x) const {
  if (x.data.size() != payload_size())
    throw shape_error("element payload size " + std::to_string(x.data.size()) +
                      " does not match " + to_string(kind_) + " context size " +
                      std::to_string(payload_size()));
}

Element AlgebraContext::zero() const {
  return Element{std::vector<double>(payload_size(), 0.0)};
}

Element AlgebraContext::identity() const {
  Element e = zero();
  switch (kind_) {
    case AlgebraKind::Real:
      e.data[0] = 1.0;
      break;
    case AlgebraKind::Complex:
      e.data[0] = 1.0;
      break;
    case AlgebraKind::Matrix:
      for (int i = 0; i < dim_; ++i) e.data[static_cast<std::size_t>(i) * dim_ + i] = 1.0;
      break;
    case AlgebraKind::Grid:
      std::fill(e.data.begin(), e.data.end(), 1.0);
      break;
  }
  return e;
}

Element AlgebraContext::constant(double alpha) const {
  return scale(alpha, identity());
}

Element AlgebraContext::from_payload(std::vector<double> payload) const {
  Element e{std::move(payload)};
  check_shape(e);
  return e;
}

Element AlgebraContext::add(const Element& x, const Element& y) const {
  check_shape(x);
  check_shape(y);
  Element r = x;
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] += y.data[i];
  return r;
}

Element AlgebraContext::sub(const Element& x, const Element& y) const {
  check_shape(x);
  check_shape(y);
  Element r = x;
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] -= y.data[i];
  return r;
}

Element AlgebraContext::negate(const Element& x) const {
  return scale(-1.0, x);
}

Element AlgebraContext::scale(double alpha, const Element& x) const {
  check_shape(x);
  Element r = x;
  for (double& v : r.data) v *= alpha;
  return r;
}

Element AlgebraContext::multiply(const Element& x, const Element& y) const {
  check_shape(x);
  check_shape(y);
  switch (kind_) {
    case AlgebraKind::Real:
      return Element{{x.data[0] * y.data[0]}};
    case AlgebraKind::Complex:
      return Element{{x.data[0] * y.data[0] - x.data[1] * y.data[1],
                      x.data[0] * y.data[1] + x.data[1] * y.data[0]}};
    case AlgebraKind::Matrix: {
      const int d = dim_;
      Element r = zero();
      for (int i = 0; i < d; ++i)
        for (int l = 0; l < d; ++l) {
          const double xil = x.data[static_cast<std::size_t>(i) * d + l];
          if (xil == 0.0) continue;
          for (int j = 0; j < d; ++j)
            r.data[static_cast<std::size_t>(i) * d + j] +=
                xil * y.data[static_cast<std::size_t>(l) * d + j];
        }
      return r;
    }
    case AlgebraKind::Grid: {
      Element r = x;
      for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] *= y.data[i];
      return r;
    }
  }
  throw numeric_error("unreachable algebra kind");
}

Element AlgebraContext::power(const Element& x, int j) const {
  if (j < 0) throw config_error("power exponent must be nonnegative");
  check_shape(x);
  Element r = identity();
  for (int i = 0; i < j; ++i) r = multiply(r, x);
  return r;
}

double AlgebraContext::norm(const Element& x) const {
  check_shape(x);
  switch (kind_) {
    case AlgebraKind::Real:
      return std::abs(x.data[0]);
    case AlgebraKind::Complex:
      return std::hypot(x.data[0], x.data[1]);
    case AlgebraKind::Matrix: {
      // induced infinity norm: max absolute row sum
      double best = 0.0;
      for (int i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (int j = 0; j < dim_; ++j)
          row += std::abs(x.data[static_cast<std::size_t>(i) * dim_ + j]);
        best = std::max(best, row);
      }
      return best;
    }
    case AlgebraKind::Grid: {
      double best = 0.0;
      for (double v : x.data) best = std::max(best, std::abs(v));
      return best;
    }
  }
  return 0.0;
}

bool AlgebraContext::is_zero(const Element& x, double tol) const {
  return norm(x) <= tol;
}

namespace {

// Samples with magnitude below this are treated as the scalar value 0,
// i.e. the grid function is not a unit.
constexpr double kGridZeroThreshold = 1e-12;

std::optional<Element> invert_matrix(int d, const Element& x) {
  // Gauss-Jordan with partial pivoting on [A | I].
  std::vector<double> a = x.data;
  std::vector<double> inv(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) inv[static_cast<std::size_t>(i) * d + i] = 1.0;

  for (int col = 0; col < d; ++col) {
    int pivot = col;
    double best = std::abs(a[static_cast<std::size_t>(col) * d + col]);
    for (int r = col + 1; r < d; ++r) {
      const double v = std::abs(a[static_cast<std::size_t>(r) * d + col]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot) * d + j],
                  a[static_cast<std::size_t>(col) * d + j]);
        std::swap(inv[static_cast<std::size_t>(pivot) * d + j],
                  inv[static_cast<std::size_t>(col) * d + j]);
      }
    }
    const double piv = a[static_cast<std::size_t>(col) * d + col];
    for (int j = 0; j < d; ++j) {
      a[static_cast<std::size_t>(col) * d + j] /= piv;
      inv[static_cast<std::size_t>(col) * d + j] /= piv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col) continue;
      const double factor = a[static_cast<std::size_t>(r) * d + col];
      if (factor == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        a[static_cast<std::size_t>(r) * d + j] -=
            factor * a[static_cast<std::size_t>(col) * d + j];
        inv[static_cast<std::size_t>(r) * d + j] -=
            factor * inv[static_cast<std::size_t>(col) * d + j];
      }
    }
  }
  return Element{std::move(inv)};
}

}  // namespace

std::optional<Element> AlgebraContext::try_inverse(const Element& x, double tol) const {
  if (tol <= 0.0) throw config_error("inversion tolerance must be positive");
  check_shape(x);

  std::optional<Element> candidate;
  switch (kind_) {
    case AlgebraKind::Real:
      if (x.data[0] != 0.0) candidate = Element{{1.0 / x.data[0]}};
      break;
    case AlgebraKind::Complex: {
      const double m2 = x.data[0] * x.data[0] + x.data[1] * x.data[1];
      if (m2 != 0.0) candidate = Element{{x.data[0] / m2, -x.data[1] / m2}};
      break;
    }
    case AlgebraKind::Matrix:
      candidate = invert_matrix(dim_, x);
      break;
    case AlgebraKind::Grid: {
      Element r = x;
      bool ok = true;
      for (double& v : r.data) {
        if (std::abs(v) < kGridZeroThreshold) {
          ok = false;
          break;
        }
        v = 1.0 / v;
      }
      if (ok) candidate = std::move(r);
      break;
    }
  }
  if (!candidate) return std::nullopt;

  const Element residual_l = sub(multiply(*candidate, x), identity());
  const Element residual_r = sub(multiply(x, *candidate), identity());
  if (norm(residual_l) > tol || norm(residual_r) > tol) return std::nullopt;
  return candidate;
}

Element AlgebraContext::random_element(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Element e = zero();
  for (double& v : e.data) v = dist(rng);
  return e;
}

double AxiomReport::worst() const {
  return std::max({submultiplicative, triangle, identity_norm, scalar_norm,
                   associativity, distributivity, scalar_compat, identity_law});
}

AxiomReport check_axioms(const AlgebraContext& ctx, int sample_count,
                         std::uint64_t seed) {
  if (sample_count < 1) throw config_error("axiom sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> scalar_dist(-2.0, 2.0);

  AxiomReport report;
  report.identity_norm = std::abs(ctx.norm(ctx.identity()) - 1.0);

  for (int s = 0; s < sample_count; ++s) {
    const Element x = ctx.random_element(rng);
    const Element y = ctx.random_element(rng);
    const Element z = ctx.random_element(rng);
    const double alpha = scalar_dist(rng);

    report.submultiplicative =
        std::max(report.submultiplicative,
                 ctx.norm(ctx.multiply(x, y)) - ctx.norm(x) * ctx.norm(y));
    report.triangle = std::max(
        report.triangle, ctx.norm(ctx.add(x, y)) - (ctx.norm(x) + ctx.norm(y)));
    report.scalar_norm =
        std::max(report.scalar_norm,
                 std::abs(ctx.norm(ctx.scale(alpha, x)) -
                          std::abs(alpha) * ctx.norm(x)));
    report.associativity = std::max(
        report.associativity,
        ctx.norm(ctx.sub(ctx.multiply(ctx.multiply(x, y), z),
                         ctx.multiply(x, ctx.multiply(y, z)))));
    const double dist_left =
        ctx.norm(ctx.sub(ctx.multiply(x, ctx.add(y, z)),
                         ctx.add(ctx.multiply(x, y), ctx.multiply(x, z))));
    const double dist_right =
        ctx.norm(ctx.sub(ctx.multiply(ctx.add(y, z), x),
                         ctx.add(ctx.multiply(y, x), ctx.multiply(z, x))));
    report.distributivity =
        std::max({report.distributivity, dist_left, dist_right});
    const Element axy = ctx.scale(alpha, ctx.multiply(x, y));
    report.scalar_compat = std::max(
        {report.scalar_compat,
         ctx.norm(ctx.sub(axy, ctx.multiply(ctx.scale(alpha, x), y))),
         ctx.norm(ctx.sub(axy, ctx.multiply(x, ctx.scale(alpha, y))))});
    report.identity_law =
        std::max({report.identity_law,
                  ctx.norm(ctx.sub(ctx.multiply(ctx.identity(), x), x)),
                  ctx.norm(ctx.sub(ctx.multiply(x, ctx.identity()), x))});
  }
  return report;
}

}  // namespace linarg
