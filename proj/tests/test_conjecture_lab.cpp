#include <gtest/gtest.h>

#include "gkern/conjecture_lab.hpp"
#include "gkern/error.hpp"
#include "gkern/relation.hpp"

using namespace gkern;

namespace {

KernelFamily c4_pair() {
  const auto g = named_group("cyclic:4");
  const auto parts = decompose(g, 1).parts;
  return kernel_family(sum_subspaces({parts[1], parts[2]}));
}

}  // namespace

TEST(Probes, CyclicFourPairSubspace) {
  const auto kf = c4_pair();
  const auto pos = probe_positive_implies_related(kf, "c4");
  EXPECT_EQ(pos.status, ConjectureStatus::ConfirmedOnInstance);
  EXPECT_EQ(pos.pairs_scanned, 16u);

  // K_0(1) = 0 yet E(0) = E(1) = {e, r^2}.
  const auto orth = probe_orthogonality_conjecture(kf, "c4");
  EXPECT_EQ(orth.status, ConjectureStatus::Counterexample);
  ASSERT_FALSE(orth.witnesses.empty());
  EXPECT_EQ(orth.witnesses.front().points, (std::vector<Point>{0, 1}));
  EXPECT_EQ(orth.witnesses.front().subgroup_sizes, (std::vector<std::size_t>{2}));
  for (const auto& w : orth.witnesses) {
    EXPECT_TRUE(revalidate_witness(kf, ConjectureId::OrthogonalIffTrivialIntersection, w));
  }

  EXPECT_EQ(search_orthogonal_kernel_basis(kf, 0), (std::vector<Point>{0, 1}));
  EXPECT_EQ(search_orthogonal_kernel_basis(kf, 2), (std::vector<Point>{2, 1}));
  EXPECT_EQ(probe_orthogonal_kernel_basis(kf, "c4").status, ConjectureStatus::ConfirmedOnInstance);
}

TEST(Probes, FullSpaceRegularAction) {
  const auto kf = kernel_family(InvariantSubspace::full_space(named_group("regular:cyclic:5")));
  EXPECT_EQ(probe_positive_implies_related(kf, "r").status, ConjectureStatus::ConfirmedOnInstance);
  // Distinct pairs agree; only x = y breaks the biconditional, since K_x(x) = c
  // while E(x) = {e}.
  const auto orth = probe_orthogonality_conjecture(kf, "r");
  ASSERT_EQ(orth.witnesses.size(), 5u);
  for (const auto& w : orth.witnesses) EXPECT_EQ(w.points[0], w.points[1]);
  EXPECT_EQ(probe_orthogonal_kernel_basis(kf, "r").status, ConjectureStatus::ConfirmedOnInstance);
}

TEST(Probes, SearchCapMakesBasisProbeInconclusive) {
  const auto kf = kernel_family(InvariantSubspace::full_space(named_group("cyclic:5")));
  const auto r = probe_orthogonal_kernel_basis(kf, "c5", 3);
  EXPECT_EQ(r.status, ConjectureStatus::Inconclusive);
  EXPECT_FALSE(r.reason.empty());
  try {
    search_orthogonal_kernel_basis(kf, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SearchCapExceeded);
  }
}

TEST(Probes, StandardPartOfS3HasNoOrthogonalBasis) {
  // K = 3I - J: off-diagonal entries are -1, never orthogonal.
  const auto g = named_group("symmetric:3");
  const auto kf = kernel_family(decompose(g, 1).parts[1]);
  const auto r = probe_orthogonal_kernel_basis(kf, "s3");
  EXPECT_EQ(r.status, ConjectureStatus::Counterexample);
  EXPECT_EQ(r.witnesses.size(), 3u);
  const auto pos = probe_positive_implies_related(kf, "s3");
  EXPECT_EQ(pos.status, ConjectureStatus::Counterexample);
  for (const auto& w : pos.witnesses) {
    EXPECT_NEAR(w.values.front(), 0.5, 1e-9);
    EXPECT_TRUE(revalidate_witness(kf, ConjectureId::PositiveImpliesRelated, w));
  }
}

TEST(Probes, StatusesSurviveRelabeling) {
  const Permutation sigma = Permutation::from_cycles(4, {{0, 3, 1}});
  const auto kf = c4_pair();
  const auto g2 = relabel(kf.group(), sigma);
  const auto moved = relabel(kf, g2, sigma);
  EXPECT_EQ(probe_positive_implies_related(kf, "a").status,
            probe_positive_implies_related(moved, "a").status);
  EXPECT_EQ(probe_orthogonality_conjecture(kf, "a").witnesses.size(),
            probe_orthogonality_conjecture(moved, "a").witnesses.size());
  EXPECT_EQ(probe_orthogonal_kernel_basis(kf, "a").status,
            probe_orthogonal_kernel_basis(moved, "a").status);
  EXPECT_EQ(equivalence_partition(moved).classes.size(), 2u);
}

TEST(Suite, RowsAreDeterministicAndLabelled) {
  std::vector<ConjectureInstance> inst{
      {"cyclic:4", named_group("cyclic:4"), {SubspacePolicy::AllSumsUpToK, 2}}};
  const auto a = run_conjecture_suite(inst, 7);
  const auto b = run_conjecture_suite(inst, 7);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.size(), 30u);
  EXPECT_EQ(a.front().instance_id, "cyclic:4/0");
  EXPECT_EQ(a.back().instance_id, "cyclic:4/2+3");
}

TEST(Suite, FailuresBecomeInconclusiveRows) {
  const auto g = group_from_generators(3, {Permutation::from_cycles(3, {{0, 1}})});
  const auto rows = run_conjecture_suite({{"bad", g, {SubspacePolicy::FullSpace, 1}}}, 1);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.status, ConjectureStatus::Inconclusive);
    EXPECT_NE(r.reason.find("NonTransitive"), std::string::npos);
  }
}
