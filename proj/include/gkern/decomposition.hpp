#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gkern/linalg.hpp"
#include "gkern/perm_group.hpp"
#include "gkern/random.hpp"
#include "gkern/report.hpp"

namespace gkern {

/// A G-invariant subspace H of C(X), held as an orthonormal basis
/// (unweighted dot product) and the orthogonal projection P = B B^H.
///
/// Construction does not validate; certify() checks every invariant.
class InvariantSubspace {
public:
  InvariantSubspace(FiniteGroup group, ComplexMatrix basis, ComplexMatrix projection);

  /// Orthonormalizes the columns of `spanning` (which must be linearly
  /// independent) and forms the projection.
  static InvariantSubspace from_basis(FiniteGroup group, const ComplexMatrix& spanning);
  static InvariantSubspace full_space(const FiniteGroup& group);
  static InvariantSubspace constants(const FiniteGroup& group);

  const FiniteGroup& group() const noexcept { return group_; }
  const ComplexMatrix& basis() const noexcept { return basis_; }
  const ComplexMatrix& projection() const noexcept { return projection_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(basis_.cols()); }
  std::size_t degree() const noexcept { return group_.degree(); }

  /// Copy with a different projection matrix (basis unchanged).
  InvariantSubspace with_projection(ComplexMatrix projection) const;

private:
  FiniteGroup group_;
  ComplexMatrix basis_;
  ComplexMatrix projection_;
};

/// The 0/1 matrix M with (M f)(x) = f(alpha^-1 x).
ComplexMatrix perm_matrix(const Permutation& alpha);

/// (1/|G|) sum over G of rho(a) A rho(a)^H. Throws NotHermitian.
ComplexMatrix commutant_average(const FiniteGroup& g, const ComplexMatrix& a,
                                const Tolerances& tol = default_tolerances());

struct EigenDecomposition {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // orthonormal columns
};

/// Throws NotHermitian, or ConvergenceFailure if the solver fails or the
/// reconstruction bound is not met.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& b,
                                                const Tolerances& tol = default_tolerances());

/// Random Hermitian (A + A^H)/2 with standard normal complex entries.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

/// Checks Hermitian and idempotent projection, G-invariance for every group
/// element, trace = dim, orthonormal basis, and P = B B^H.
Report certify(const InvariantSubspace& h, const Tolerances& tol = default_tolerances());

struct Decomposition {
  std::vector<InvariantSubspace> parts;
  std::size_t attempts = 0;
  bool transitive = true;
};

/// Splits C(X) into invariant subspaces by clustering the spectrum of a
/// random averaged Hermitian operator. Parts are sorted by dimension, then
/// by the first column of their projection. Throws DecompositionUnstable
/// when six consecutive samples fail certification.
Decomposition decompose(const FiniteGroup& g, std::uint64_t seed,
                        const Tolerances& tol = default_tolerances());

/// Schur test: true iff every sampled averaged operator restricts to a
/// scalar on H.
bool is_irreducible(const InvariantSubspace& h, std::size_t trials, std::uint64_t seed,
                    const Tolerances& tol = default_tolerances());

/// Direct sum of pairwise orthogonal parts. Throws NotOrthogonal or
/// InvalidArgument (empty list, mixed groups), and IdentityViolation if the
/// sum fails certification.
InvariantSubspace sum_subspaces(const std::vector<InvariantSubspace>& parts,
                                const Tolerances& tol = default_tolerances());

/// Hex SHA-256 of the projection's entries (row-major, re/im as IEEE doubles).
std::string projection_digest(const InvariantSubspace& h);

// ---------------------------------------------------------------------------
// Subspace selection

enum class SubspacePolicy { EachMinimal, AllSumsUpToK, FullSpace };

std::string to_string(SubspacePolicy policy);
/// Accepts each-minimal, all-sums-up-to-k, full-space.
SubspacePolicy parse_subspace_policy(const std::string& text);

struct SubspaceSelector {
  SubspacePolicy policy = SubspacePolicy::EachMinimal;
  std::size_t k = 1;  // at most 4
};

struct SelectedSubspace {
  std::string label;                 // "2", "0+3", or "full"
  std::vector<std::size_t> part_ids; // indices into the decomposition
  InvariantSubspace subspace;
};

/// Subspaces chosen from `parts` by the selector; sums of up to k parts are
/// ordered by size, then lexicographically.
std::vector<SelectedSubspace> select_subspaces(const FiniteGroup& g,
                                               const std::vector<InvariantSubspace>& parts,
                                               const SubspaceSelector& selector,
                                               const Tolerances& tol = default_tolerances());

}  // namespace gkern
