#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gkern/decomposition.hpp"
#include "gkern/kernels.hpp"

namespace gkern {

enum class ConjectureId {
  PositiveImpliesRelated,         // |K_x(y)| > 0 implies x ~ y
  OrthogonalIffTrivialIntersection,  // K_x orthogonal to K_y iff E(x) and E(y) meet in {e}
  OrthogonalKernelBasis,          // every x starts an orthogonal kernel basis of H
};

enum class ConjectureStatus { ConfirmedOnInstance, Counterexample, Inconclusive };

std::string to_string(ConjectureId id);
std::string to_string(ConjectureStatus status);
ConjectureId parse_conjecture_id(const std::string& text);
ConjectureStatus parse_conjecture_status(const std::string& text);

struct Witness {
  std::vector<Point> points;
  std::vector<double> values;
  std::vector<std::size_t> subgroup_sizes;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct ConjectureReport {
  ConjectureId conjecture = ConjectureId::PositiveImpliesRelated;
  std::string instance_id;
  ConjectureStatus status = ConjectureStatus::Inconclusive;
  std::vector<Witness> witnesses;
  double relation_threshold = 0.0;       // relative to c
  double orthogonality_threshold = 0.0;  // relative to c
  std::size_t pairs_scanned = 0;
  std::string reason;  // set when inconclusive

  friend bool operator==(const ConjectureReport&, const ConjectureReport&) = default;
};

inline constexpr std::size_t kDefaultBasisSearchCap = 12;

/// Counterexample: a pair with |K_x(y)| > orthogonality * c that is not
/// related. Witness values: |K_x(y)| / c.
ConjectureReport probe_positive_implies_related(const KernelFamily& kf, const std::string& instance_id,
                                                const Tolerances& tol = default_tolerances());

/// Counterexample: a pair where "|K_x(y)| <= orthogonality * c" and
/// "E(x) and E(y) intersect trivially" disagree. Witness values: |K_x(y)|;
/// subgroup sizes: |E(x) n E(y)|.
ConjectureReport probe_orthogonality_conjecture(const KernelFamily& kf,
                                                const std::string& instance_id,
                                                const Tolerances& tol = default_tolerances());

/// Backtracking search for x = x_1 < ... points whose kernels are pairwise
/// orthogonal and number dim H; the remaining points are increasing, so the
/// first hit is the lexicographically first solution. Throws
/// SearchCapExceeded if dim H > cap.
std::optional<std::vector<Point>> search_orthogonal_kernel_basis(
    const KernelFamily& kf, Point x, std::size_t cap = kDefaultBasisSearchCap,
    const Tolerances& tol = default_tolerances());

/// Runs the basis search from every point; a point with no basis is a
/// counterexample witness. Inconclusive when dim H exceeds the cap.
ConjectureReport probe_orthogonal_kernel_basis(const KernelFamily& kf, const std::string& instance_id,
                                               std::size_t cap = kDefaultBasisSearchCap,
                                               const Tolerances& tol = default_tolerances());

/// Re-evaluates both sides of the conjecture on the witness alone and
/// returns true iff the discrepancy reproduces.
bool revalidate_witness(const KernelFamily& kf, ConjectureId conjecture, const Witness& witness,
                        std::size_t cap = kDefaultBasisSearchCap,
                        const Tolerances& tol = default_tolerances());

struct ConjectureInstance {
  std::string instance_id;
  FiniteGroup group;
  SubspaceSelector selector;
};

/// All three probes on every selected subspace of every instance, in
/// instance order. Per-instance failures become inconclusive rows carrying
/// the error text. instance_id of each row is "<instance>/<subspace label>".
std::vector<ConjectureReport> run_conjecture_suite(const std::vector<ConjectureInstance>& instances,
                                                   std::uint64_t seed,
                                                   const Tolerances& tol = default_tolerances());

}  // namespace gkern
