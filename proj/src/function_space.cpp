#include "gkern/function_space.hpp"

#include <cmath>
#include <sstream>

#include "gkern/error.hpp"

namespace gkern {

FunctionOnX::FunctionOnX(std::initializer_list<Complex> v)
    : values(static_cast<Eigen::Index>(v.size())) {
  Eigen::Index i = 0;
  for (const auto& z : v) values(i++) = z;
}

FunctionOnX FunctionOnX::constant(std::size_t n, Complex value) {
  return FunctionOnX(ComplexVector::Constant(static_cast<Eigen::Index>(n), value));
}

FunctionOnX FunctionOnX::indicator(std::size_t n, Point x) {
  FunctionOnX f = zero(n);
  f.values(static_cast<Eigen::Index>(x)) = 1.0;
  return f;
}

FunctionOnX FunctionOnX::random(std::size_t n, Rng& rng) {
  FunctionOnX f = zero(n);
  for (Eigen::Index i = 0; i < f.values.size(); ++i) f.values(i) = rng.complex_normal();
  return f;
}

Complex inner_product(const FunctionOnX& f, const FunctionOnX& g) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch, "inner product of functions with lengths " +
                                               std::to_string(f.size()) + " and " +
                                               std::to_string(g.size()));
  }
  if (f.size() == 0) return 0.0;
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i) sum += f.values(i) * std::conj(g.values(i));
  return sum * measure_weight(f.size());
}

double norm_squared(const FunctionOnX& f) { return inner_product(f, f).real(); }

Complex integrate(const FunctionOnX& f) {
  if (f.size() == 0) return 0.0;
  return f.values.sum() * measure_weight(f.size());
}

FunctionOnX translate(const FunctionOnX& f, const Permutation& alpha) {
  if (alpha.degree() != f.size()) {
    throw Error(ErrorCode::DegreeMismatch, "translating a function on " + std::to_string(f.size()) +
                                               " points by a permutation of degree " +
                                               std::to_string(alpha.degree()));
  }
  FunctionOnX h = FunctionOnX::zero(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    h.values(static_cast<Eigen::Index>(x)) = f(alpha(x));
  }
  return h;
}

Report verify_invariance_lemma(const FiniteGroup& g, std::size_t trials, std::uint64_t seed,
                               const Tolerances& tol) {
  Report report;
  report.subject = "invariant inner product";
  auto& preserved = report.add("translation.preserves_inner_product", tol.identity);
  auto& adjoint = report.add("translation.adjoint_is_inverse", tol.identity);
  auto& measure = report.add("measure.invariant_integral", tol.identity);
  auto& zero = report.add("translation.zero_functions", 0.0);

  const std::size_t n = g.degree();
  Rng rng(seed);

  const FunctionOnX z = FunctionOnX::zero(n);
  for (ElementIndex a = 0; a < g.order(); ++a) {
    const auto& alpha = g.element(a);
    const double d = std::abs(inner_product(translate(z, alpha), translate(z, alpha)) -
                              inner_product(z, z));
    zero.observe(d, "alpha=" + std::to_string(a));
  }

  for (std::size_t t = 0; t < trials; ++t) {
    const FunctionOnX f = FunctionOnX::random(n, rng);
    const FunctionOnX h = FunctionOnX::random(n, rng);
    const Complex fh = inner_product(f, h);
    for (ElementIndex a = 0; a < g.order(); ++a) {
      const auto& alpha = g.element(a);
      const auto& alpha_inv = g.element(g.inverse(a));
      std::ostringstream where;
      where << "trial=" << t << " alpha=" << a;
      const Complex lhs1 = inner_product(translate(f, alpha), translate(h, alpha));
      preserved.observe(std::abs(lhs1 - fh), where.str());
      const Complex lhs2 = inner_product(translate(f, alpha), h);
      const Complex rhs2 = inner_product(f, translate(h, alpha_inv));
      adjoint.observe(std::abs(lhs2 - rhs2), where.str());
      measure.observe(std::abs(integrate(translate(f, alpha)) - integrate(f)), where.str());
    }
  }
  return report;
}

}  // namespace gkern
