#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gkern/kernels.hpp"

namespace gkern {

/// Classes of X under x ~ y (K_y = lambda K_x, lambda != 0), with the
/// linking scalars for every ordered related pair.
struct EquivalencePartition {
  std::vector<std::vector<Point>> classes;  // each sorted; ordered by least member
  std::map<std::pair<Point, Point>, Complex> lambda;  // (x, y) -> lambda with K_y = lambda K_x

  /// Index into `classes` of the class containing x.
  std::size_t class_of(Point x) const;
};

struct RelationStabilizer {
  Point base_point;
  Subgroup subgroup;
};

/// x ~ y, decided by |K_x(y)| >= c (1 - tol.relation).
bool related(const KernelFamily& kf, Point x, Point y, const Tolerances& tol = default_tolerances());

/// lambda = K_y(x) / c, asserting K_y = lambda K_x and |lambda| = 1.
/// Throws NotRelated, or IdentityViolation.
Complex lambda_of(const KernelFamily& kf, Point x, Point y,
                  const Tolerances& tol = default_tolerances());

/// Union-find over related pairs, then an explicit check that every pair in
/// a class is related (TransitivityViolation otherwise).
EquivalencePartition equivalence_partition(const KernelFamily& kf,
                                           const Tolerances& tol = default_tolerances());

/// E(x) = {g : g x ~ x}; throws ClosureViolation if the scan is not a
/// subgroup.
RelationStabilizer relation_stabilizer(const KernelFamily& kf, Point x,
                                       const Tolerances& tol = default_tolerances());

/// Evaluates, for every pair, the four characterizations of x ~ y
/// independently: (a) [K_x | K_y] has rank one, (b) b x and b y have
/// rank-one kernel columns for every group element b, (c) |K_z(x)| = |K_z(y)|
/// for all z, (d) |K_x(y)| = c. Any disagreement is a violation. Also checks
/// that the relation is an equivalence and |lambda| = 1 with lambda(y, x) =
/// 1 / lambda(x, y).
Report verify_relation_characterizations(const KernelFamily& kf,
                                         const Tolerances& tol = default_tolerances());

/// K_x(y) = c iff K_y = K_x, for every pair.
Report verify_kernel_equality_criterion(const KernelFamily& kf,
                                        const Tolerances& tol = default_tolerances());

/// |E(x)| = |[x]| |G_x| pointwise; |[x]| > 1 iff |E(x)| > 1 at points with
/// trivial point stabilizer (it fails elsewhere, e.g. S_3 on three points with
/// the 2-dimensional part); either every class is a singleton or none is;
/// all classes share one size.
Report verify_class_nontriviality(const KernelFamily& kf,
                                  const Tolerances& tol = default_tolerances());

/// Related points share a relation stabilizer; b in E(x) iff b in E(b x);
/// E(b x) = b E(x) b^-1; the conjugation and commutator memberships implied
/// by E(a x) <= E(x); and E(a x) <= E(x) iff E(x) <= E(a^-1 x).
Report verify_stabilizer_laws(const KernelFamily& kf, const Tolerances& tol = default_tolerances());

/// Normalizer transport N(E(b x)) = b N(E(x)) b^-1 (and the membership
/// form), conjugacy witnesses for E and N(E) across all pairs,
/// E(a x) = E(x) iff a in N(E(x)), and the three-way equivalence between
/// self-normalizing stabilizers and "E(x) = E(y) implies x ~ y".
Report verify_normalizer_laws(const KernelFamily& kf, const Tolerances& tol = default_tolerances());

/// Pure stabilizer/partition summary used by the normalizer report and the
/// CLI.
struct StabilizerTable {
  EquivalencePartition partition;
  std::vector<Subgroup> stabilizers;  // E(x), indexed by point
  std::vector<Subgroup> normalizers;  // N_G(E(x)), indexed by point
};

StabilizerTable stabilizer_table(const KernelFamily& kf, const Tolerances& tol = default_tolerances());

/// The three booleans tied together by the self-normalizing criterion.
struct SelfNormalizingSummary {
  std::vector<bool> at_point;  // E(x) = N_G(E(x))
  bool everywhere = false;
  bool equal_stabilizers_imply_related = false;

  bool consistent() const;
};

SelfNormalizingSummary self_normalizing_summary(const KernelFamily& kf, const StabilizerTable& t,
                                                const Tolerances& tol = default_tolerances());

}  // namespace gkern
