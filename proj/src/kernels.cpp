#include "gkern/kernels.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "gkern/error.hpp"

namespace gkern {

namespace {

std::string pair_label(Point x, Point y) {
  return "x=" + std::to_string(x) + " y=" + std::to_string(y);
}

double max_abs(const FunctionOnX& f) { return gkern::max_abs(ComplexMatrix(f.values)); }

FunctionOnX project(const KernelFamily& kf, const FunctionOnX& f) {
  return FunctionOnX(kf.subspace().projection() * f.values);
}

}  // namespace

KernelFamily::KernelFamily(InvariantSubspace subspace, ComplexMatrix kernel_matrix, double c)
    : subspace_(std::move(subspace)), kernel_(std::move(kernel_matrix)), c_(c) {}

FunctionOnX KernelFamily::kernel(Point x) const {
  return FunctionOnX(kernel_.col(static_cast<Eigen::Index>(x)));
}

KernelFamily kernel_family_unchecked(const InvariantSubspace& h) {
  const double n = static_cast<double>(h.degree());
  ComplexMatrix k = n * h.projection();
  const double c = h.degree() == 0 ? 0.0 : k(0, 0).real();
  return KernelFamily(h, std::move(k), c);
}

KernelFamily kernel_family(const InvariantSubspace& h, const Tolerances& tol) {
  if (h.dim() == 0) throw Error(ErrorCode::TrivialSubspace, "kernels of the zero subspace");
  KernelFamily kf = kernel_family_unchecked(h);
  const auto n = static_cast<Eigen::Index>(h.degree());
  const ComplexMatrix& k = kf.matrix();
  const ComplexMatrix& p = h.projection();
  for (Eigen::Index x = 0; x < n; ++x) {
    if (std::abs(p(x, x) - p(0, 0)) > tol.assertion) {
      std::ostringstream os;
      os << "projection diagonal is not constant (P(0,0)=" << p(0, 0) << ", P(" << x << ","
         << x << ")=" << p(x, x) << "); the action is not transitive on this subspace";
      throw Error(ErrorCode::NonTransitive, os.str());
    }
  }
  auto violated = [](const std::string& what) { throw Error(ErrorCode::IdentityViolation, what); };
  if (hermitian_defect(k) > tol.symmetry) violated("kernel matrix is not Hermitian");
  if (!(kf.c() > 0.0)) violated("kernel constant is not positive");
  for (Eigen::Index x = 0; x < n; ++x) {
    if (std::abs(k(x, x) - Complex(kf.c())) > tol.constant) violated("kernel diagonal is not constant");
  }
  if (std::abs(kf.c() - static_cast<double>(h.dim())) > tol.constant) {
    violated("kernel constant differs from dim H");
  }
  if (gkern::max_abs(p * k - k) > tol.assertion) violated("kernel columns leave the subspace");
  return kf;
}

bool in_subspace(const KernelFamily& kf, const FunctionOnX& f, const Tolerances& tol) {
  if (f.size() != kf.degree()) {
    throw Error(ErrorCode::LengthMismatch, "function length differs from the action degree");
  }
  return max_abs(FunctionOnX(project(kf, f).values - f.values)) <= tol.membership;
}

FunctionOnX reproduce(const KernelFamily& kf, const FunctionOnX& f, const Tolerances& tol) {
  if (!in_subspace(kf, f, tol)) throw Error(ErrorCode::NotInSubspace, "reproduce: f is not in H");
  FunctionOnX out = FunctionOnX::zero(kf.degree());
  const double w = measure_weight(kf.degree());
  for (Point x = 0; x < kf.degree(); ++x) out.values += (w * f(x)) * kf.kernel(x).values;
  if (max_abs(FunctionOnX(out.values - f.values)) > tol.reproduce) {
    throw Error(ErrorCode::IdentityViolation, "kernel integral does not reproduce f");
  }
  return out;
}

Report verify_translation_laws(const KernelFamily& kf, const Tolerances& tol) {
  Report r;
  r.subject = "kernel translation laws";
  auto& covariance = r.add("kernel.translation_covariance", tol.symmetry);
  auto& stabilizer = r.add("kernel.stabilizer_invariance", tol.symmetry);
  const FiniteGroup& g = kf.group();
  const std::size_t n = kf.degree();
  for (ElementIndex a = 0; a < g.order(); ++a) {
    const Permutation& alpha = g.element(a);
    const Permutation& alpha_inv = g.element(g.inverse(a));
    for (Point x = 0; x < n; ++x) {
      double dev = 0.0;
      for (Point y = 0; y < n; ++y) {
        dev = std::max(dev, std::abs(kf.value(alpha(x), y) - kf.value(x, alpha_inv(y))));
      }
      covariance.observe(dev, "alpha=" + std::to_string(a) + " x=" + std::to_string(x));
      if (alpha(x) == x) {
        const FunctionOnX kx = kf.kernel(x);
        const double sdev = max_abs(FunctionOnX(translate(kx, alpha).values - kx.values));
        stabilizer.observe(sdev, "alpha=" + std::to_string(a) + " x=" + std::to_string(x));
      }
    }
  }
  return r;
}

Report verify_kernel_properties(const KernelFamily& kf, const Tolerances& tol) {
  Report r;
  r.subject = "kernel properties";
  const std::size_t n = kf.degree();
  const ComplexMatrix& basis = kf.subspace().basis();
  const double w = measure_weight(n);

  auto& evaluation = r.add("kernel.reproducing_identity", tol.reproduce);
  auto& integral = r.add("kernel.integral_reproduction", tol.reproduce);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    const FunctionOnX f(basis.col(j));
    FunctionOnX rebuilt = FunctionOnX::zero(n);
    for (Point x = 0; x < n; ++x) {
      const FunctionOnX kx = kf.kernel(x);
      evaluation.observe(std::abs(inner_product(f, kx) - f(x)),
                         "basis=" + std::to_string(j) + " x=" + std::to_string(x));
      rebuilt.values += (w * f(x)) * kx.values;
    }
    integral.observe(max_abs(FunctionOnX(rebuilt.values - f.values)), "basis=" + std::to_string(j));
  }

  auto& symmetry = r.add("kernel.hermitian_symmetry", tol.symmetry);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      symmetry.observe(std::abs(kf.value(x, y) - std::conj(kf.value(y, x))), pair_label(x, y));
    }
  }

  r.append(verify_translation_laws(kf, tol));

  auto& diagonal = r.add("kernel.constant_positive_diagonal", tol.constant);
  diagonal.expect(kf.c() > 0.0, "c > 0");
  for (Point x = 0; x < n; ++x) {
    diagonal.observe(std::abs(kf.value(x, x) - Complex(kf.c())), "x=" + std::to_string(x));
  }
  r.add("kernel.c_equals_dim", tol.constant)
      .observe(std::abs(kf.c() - static_cast<double>(kf.dim())), "c - dim H");

  auto& membership = r.add("kernel.kernels_in_subspace", tol.assertion);
  for (Point x = 0; x < n; ++x) {
    const FunctionOnX kx = kf.kernel(x);
    membership.observe(max_abs(FunctionOnX(project(kf, kx).values - kx.values)),
                       "x=" + std::to_string(x));
  }
  return r;
}

Report verify_basic_kernel_lemmas(const KernelFamily& kf, std::size_t trials, std::uint64_t seed,
                                  const Tolerances& tol) {
  Report r;
  r.subject = "basic kernel lemmas";
  auto& norm = r.add("kernel.norm_squared_equals_c", tol.assertion);
  auto& bound = r.add("kernel.modulus_bounded_by_c", tol.assertion);
  auto& evaluation = r.add("kernel.evaluation_is_inner_product", tol.assertion);
  auto& orth_iff = r.add("kernel.orthogonal_iff_vanishing", tol.assertion);
  auto& residual = r.add("kernel.residual_orthogonal", tol.assertion);

  const std::size_t n = kf.degree();
  const double c = kf.c();
  for (Point x = 0; x < n; ++x) {
    const FunctionOnX kx = kf.kernel(x);
    norm.observe(std::abs(norm_squared(kx) - c), "x=" + std::to_string(x));
    for (Point y = 0; y < n; ++y) {
      bound.observe(std::max(0.0, std::abs(kf.value(x, y)) - c), pair_label(x, y));
    }
  }

  Rng rng(seed);
  std::vector<FunctionOnX> samples;
  for (Point x = 0; x < n; ++x) samples.push_back(kf.kernel(x));
  for (std::size_t t = 0; t < trials; ++t) {
    samples.push_back(project(kf, FunctionOnX::random(n, rng)));
  }
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const FunctionOnX& f = samples[s];
    for (Point x = 0; x < n; ++x) {
      const FunctionOnX kx = kf.kernel(x);
      const std::string where = "sample=" + std::to_string(s) + " x=" + std::to_string(x);
      evaluation.observe(std::abs(inner_product(f, kx) - f(x)), where);

      FunctionOnX rest(f.values - (f(x) / c) * kx.values);
      residual.observe(std::abs(inner_product(rest, kx)), where);

      // Both directions: f itself (usually non-vanishing at x) and the
      // residual (vanishing at x).
      for (const FunctionOnX* h : {&f, static_cast<const FunctionOnX*>(&rest)}) {
        const bool orthogonal = std::abs(inner_product(*h, kx)) <= tol.assertion;
        const bool vanishes = std::abs((*h)(x)) <= tol.assertion;
        orth_iff.expect(orthogonal == vanishes, where);
      }
    }
  }
  return r;
}

ExtremalityResult projection_extremality(const KernelFamily& kf, const FunctionOnX& f, Point x,
                                         const Tolerances& tol) {
  if (!in_subspace(kf, f, tol)) {
    throw Error(ErrorCode::NotInSubspace, "projection_extremality: f is not in H");
  }
  const double c = kf.c();
  ExtremalityResult out;
  out.projected = FunctionOnX((f(x) / c) * kf.kernel(x).values);
  const FunctionOnX rest(f.values - out.projected.values);
  const double total = norm_squared(f);
  out.is_multiple = max_abs(rest) <= tol.assertion;
  out.norm_is_extremal = std::abs(total - std::norm(f(x)) / c) <= tol.assertion;
  const double split = std::abs(total - norm_squared(out.projected) - norm_squared(rest));
  if (split > tol.assertion) {
    throw Error(ErrorCode::IdentityViolation, "Pythagorean split of f fails");
  }
  return out;
}

FunctionOnX orthogonal_kernel_expansion(const KernelFamily& kf, const std::vector<Point>& points,
                                        const FunctionOnX& f, const Tolerances& tol) {
  if (points.size() != kf.dim()) {
    throw Error(ErrorCode::WrongCount, "expected " + std::to_string(kf.dim()) + " points, got " +
                                           std::to_string(points.size()));
  }
  if (f.size() != kf.degree()) {
    throw Error(ErrorCode::LengthMismatch, "function length differs from the action degree");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (std::abs(kf.value(points[i], points[j])) > tol.assertion) {
        throw Error(ErrorCode::NotPairwiseOrthogonal,
                    "kernels at " + std::to_string(points[i]) + " and " +
                        std::to_string(points[j]) + " are not orthogonal");
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(kf.degree());
  const auto d = static_cast<Eigen::Index>(points.size());
  ComplexMatrix columns(n, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    columns.col(i) = kf.kernel(points[static_cast<std::size_t>(i)]).values;
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(columns);
  const auto& sv = svd.singularValues();
  if (d > 0 && sv(d - 1) <= tol.rank * sv(0)) {
    throw Error(ErrorCode::IdentityViolation, "orthogonal kernels are linearly dependent");
  }
  const double c = kf.c();
  for (Point x = 0; x < kf.degree(); ++x) {
    double sum = 0.0;
    for (auto xi : points) sum += std::norm(kf.value(xi, x));
    if (std::abs(sum - c * c) > tol.expansion) {
      throw Error(ErrorCode::IdentityViolation,
                  "sum of squared kernel moduli differs from c^2 at x=" + std::to_string(x));
    }
  }
  FunctionOnX out = FunctionOnX::zero(kf.degree());
  for (auto xi : points) out.values += (f(xi) / c) * kf.kernel(xi).values;
  if (in_subspace(kf, f, tol) && max_abs(FunctionOnX(out.values - f.values)) > tol.expansion) {
    throw Error(ErrorCode::IdentityViolation, "orthogonal kernel expansion does not recover f");
  }
  return out;
}

KernelFamily relabel(const KernelFamily& kf, const FiniteGroup& relabeled_group,
                     const Permutation& sigma) {
  const ComplexMatrix m = perm_matrix(sigma);
  const InvariantSubspace& h = kf.subspace();
  InvariantSubspace moved(relabeled_group, m * h.basis(), m * h.projection() * m.adjoint());
  return KernelFamily(std::move(moved), m * kf.matrix() * m.adjoint(), kf.c());
}

}  // namespace gkern
