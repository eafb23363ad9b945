#pragma once

#include <cstdint>
#include <vector>

#include "gkern/decomposition.hpp"
#include "gkern/function_space.hpp"

namespace gkern {

/// Reproducing kernels of an invariant subspace H: column x of the kernel
/// matrix holds K_x, so matrix()(y, x) = K_x(y). In the finite model the
/// kernel matrix is n P and c = K_x(x) = dim H.
class KernelFamily {
public:
  KernelFamily(InvariantSubspace subspace, ComplexMatrix kernel_matrix, double c);

  const InvariantSubspace& subspace() const noexcept { return subspace_; }
  const FiniteGroup& group() const noexcept { return subspace_.group(); }
  const ComplexMatrix& matrix() const noexcept { return kernel_; }
  double c() const noexcept { return c_; }
  std::size_t degree() const noexcept { return subspace_.degree(); }
  std::size_t dim() const noexcept { return subspace_.dim(); }

  /// K_x(y)
  Complex value(Point x, Point y) const {
    return kernel_(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
  }
  FunctionOnX kernel(Point x) const;

private:
  InvariantSubspace subspace_;
  ComplexMatrix kernel_;
  double c_;
};

/// K = n P with every kernel invariant verified (Hermitian symmetry,
/// constant positive diagonal equal to dim H, columns inside H).
/// Throws TrivialSubspace, NonTransitive, or IdentityViolation.
KernelFamily kernel_family(const InvariantSubspace& h, const Tolerances& tol = default_tolerances());

/// K = n P and c = n P(0,0) with no verification; reports built on top of
/// it name whichever law fails.
KernelFamily kernel_family_unchecked(const InvariantSubspace& h);

/// True iff ||P f - f||_max <= tol.membership.
bool in_subspace(const KernelFamily& kf, const FunctionOnX& f,
                 const Tolerances& tol = default_tolerances());

/// (1/n) sum_x f(x) K_x, asserted equal to f. Throws NotInSubspace, or
/// IdentityViolation if reproduction fails.
FunctionOnX reproduce(const KernelFamily& kf, const FunctionOnX& f,
                      const Tolerances& tol = default_tolerances());

/// The defining kernel properties checked over all points and a basis of H:
/// reproducing identity on the basis, Hermitian symmetry, integral
/// reproduction, translation covariance, stabilizer invariance, constant
/// positive diagonal, c = dim H, and kernel columns lying in H.
Report verify_kernel_properties(const KernelFamily& kf, const Tolerances& tol = default_tolerances());

/// K_{a x}(y) = K_x(a^-1 y) for all a, x, y, and K_x = K_x o a whenever
/// a x = x.
Report verify_translation_laws(const KernelFamily& kf, const Tolerances& tol = default_tolerances());

/// ||K_x||^2 = c, |K_x(y)| <= c, [f, K_x] = f(x) (so f is orthogonal to
/// K_x iff f(x) = 0), and f - (f(x)/c) K_x orthogonal to K_x, on random
/// f in H.
Report verify_basic_kernel_lemmas(const KernelFamily& kf, std::size_t trials, std::uint64_t seed,
                                  const Tolerances& tol = default_tolerances());

struct ExtremalityResult {
  FunctionOnX projected;  // (f(x)/c) K_x
  bool is_multiple = false;       // f = (f(x)/c) K_x
  bool norm_is_extremal = false;  // ||f||^2 = |f(x)|^2 / c
  bool holds() const noexcept { return is_multiple == norm_is_extremal; }
};

/// Projection of f onto span{K_x} and both sides of the norm criterion for
/// f being a kernel multiple. Throws NotInSubspace, or IdentityViolation if
/// the Pythagorean split fails.
ExtremalityResult projection_extremality(const KernelFamily& kf, const FunctionOnX& f, Point x,
                                         const Tolerances& tol = default_tolerances());

/// sum_i (f(x_i)/c) K_{x_i} for pairwise orthogonal kernels forming a basis
/// of H. Also asserts, on success, sum_i |K_{x_i}(x)|^2 = c^2 for all x, full
/// column rank, and (when f is in H) that the expansion equals f.
/// Throws WrongCount, NotPairwiseOrthogonal, or IdentityViolation.
FunctionOnX orthogonal_kernel_expansion(const KernelFamily& kf, const std::vector<Point>& points,
                                        const FunctionOnX& f,
                                        const Tolerances& tol = default_tolerances());

/// Kernel family of the relabeled instance (points renamed by sigma).
KernelFamily relabel(const KernelFamily& kf, const FiniteGroup& relabeled_group,
                     const Permutation& sigma);

}  // namespace gkern
