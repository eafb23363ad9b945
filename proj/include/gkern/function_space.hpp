#pragma once

#include <cstdint>
#include <initializer_list>

#include "gkern/linalg.hpp"
#include "gkern/perm_group.hpp"
#include "gkern/random.hpp"
#include "gkern/report.hpp"

namespace gkern {

/// An element of C(X): values[i] is the value at point i.
struct FunctionOnX {
  ComplexVector values;

  FunctionOnX() = default;
  explicit FunctionOnX(ComplexVector v) : values(std::move(v)) {}
  FunctionOnX(std::initializer_list<Complex> v);

  static FunctionOnX zero(std::size_t n) { return FunctionOnX(ComplexVector::Zero(static_cast<Eigen::Index>(n))); }
  static FunctionOnX constant(std::size_t n, Complex value);
  static FunctionOnX indicator(std::size_t n, Point x);
  static FunctionOnX random(std::size_t n, Rng& rng);

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
  /// Evaluation functional E_x(f) = f(x).
  Complex operator()(Point x) const { return values(static_cast<Eigen::Index>(x)); }
};

/// Uniform G-invariant probability weight 1/n on a transitive n-point set.
inline double measure_weight(std::size_t n) { return 1.0 / static_cast<double>(n); }

/// [f, g] = (1/n) sum_i f(i) conj(g(i)). Throws LengthMismatch.
Complex inner_product(const FunctionOnX& f, const FunctionOnX& g);
double norm_squared(const FunctionOnX& f);
/// Integral of f against the uniform measure.
Complex integrate(const FunctionOnX& f);

/// h(x) = f(alpha x). Throws DegreeMismatch.
FunctionOnX translate(const FunctionOnX& f, const Permutation& alpha);

/// Samples `trials` random function pairs and checks, for every alpha in g,
/// that translation preserves the inner product, moves to the adjoint as
/// translation by alpha^-1, and preserves integrals. Also checks f = g = 0.
Report verify_invariance_lemma(const FiniteGroup& g, std::size_t trials, std::uint64_t seed,
                               const Tolerances& tol = default_tolerances());

}  // namespace gkern
