#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linarg/errors.hpp"

namespace linarg {

enum class AlgebraKind { Real, Complex, Matrix, Grid };

std::string to_string(AlgebraKind kind);

// An algebra element. The payload layout depends on the owning context:
// one double (real), [re, im] (complex), row-major d*d entries (matrix),
// or m samples x(r_j) at r_j = j/(m-1) (grid).
struct Element {
  std::vector<double> data;
};

// A concrete Banach algebra instance supplying arithmetic, the norm,
// identity/zero, and inversion. Contexts are immutable and cheap to copy.
class AlgebraContext {
public:
  static AlgebraContext real();
  static AlgebraContext complex();
  static AlgebraContext matrix(int dim);
  static AlgebraContext grid(int points);

  AlgebraKind kind() const { return kind_; }
  int dim() const { return dim_; }
  int points() const { return dim_; }
  std::size_t payload_size() const;
  bool same_as(const AlgebraContext& other) const;

  Element zero() const;
  Element identity() const;
  // alpha * identity; for the grid kind this is the constant function.
  Element constant(double alpha) const;
  Element from_payload(std::vector<double> payload) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element negate(const Element& x) const;
  Element multiply(const Element& x, const Element& y) const;
  Element scale(double alpha, const Element& x) const;
  Element power(const Element& x, int j) const;

  // |x|: absolute value / modulus, max absolute row sum (matrix),
  // max over samples (grid).
  double norm(const Element& x) const;

  // Returns x^{-1} with norm(x^{-1} x - 1) <= tol, or nullopt when x is
  // not a unit. tol <= 0 is an argument error.
  std::optional<Element> try_inverse(const Element& x, double tol) const;

  bool is_zero(const Element& x, double tol = 0.0) const;

  // Entries uniform in [-1, 1].
  Element random_element(std::mt19937_64& rng) const;

  void check_shape(const Element& x) const;

private:
  AlgebraContext(AlgebraKind kind, int dim) : kind_(kind), dim_(dim) {}

  AlgebraKind kind_;
  int dim_;  // matrix dimension or grid point count; 1 otherwise
};

// Max observed violation per axiom over the sampled elements. A violation
// is how far the left side exceeds the right side of an inequality, or the
// norm of the difference for an identity.
struct AxiomReport {
  double submultiplicative = 0.0;  // |xy| <= |x||y|
  double triangle = 0.0;           // |x+y| <= |x|+|y|
  double identity_norm = 0.0;      // |1| = 1
  double scalar_norm = 0.0;        // |alpha x| = |alpha||x|
  double associativity = 0.0;      // (xy)z = x(yz)
  double distributivity = 0.0;     // x(y+z) = xy+xz and (y+z)x = yx+zx
  double scalar_compat = 0.0;      // alpha(xy) = (alpha x)y = x(alpha y)
  double identity_law = 0.0;       // 1x = x1 = x

  double worst() const;
  bool all_within(double tol) const { return worst() <= tol; }
};

AxiomReport check_axioms(const AlgebraContext& ctx, int sample_count,
                         std::uint64_t seed);

}  // namespace linarg
