#include <gtest/gtest.h>

#include "gkern/error.hpp"
#include "gkern/relation.hpp"
#include "oracles.hpp"

using namespace gkern;

namespace {

const char* const kMatrix[] = {"cyclic:4",    "cyclic:6",    "dihedral:4",
                               "symmetric:3", "symmetric:4", "regular:symmetric:3"};

KernelFamily c4_pair() {
  const auto g = named_group("cyclic:4");
  const auto parts = decompose(g, 1).parts;
  return kernel_family(sum_subspaces({parts[1], parts[2]}));
}

std::vector<ElementIndex> rotations(const FiniteGroup& g, std::initializer_list<std::uint32_t> shifts) {
  std::vector<ElementIndex> out;
  for (auto k : shifts) {
    std::vector<std::uint32_t> images(g.degree());
    for (std::uint32_t i = 0; i < images.size(); ++i) images[i] = (i + k) % images.size();
    out.push_back(g.index_of(Permutation(images)).value());
  }
  return out;
}

}  // namespace

TEST(Partition, CyclicFourPairSubspace) {
  const auto kf = c4_pair();
  const auto p = equivalence_partition(kf);
  EXPECT_EQ(p.classes, (std::vector<std::vector<Point>>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(related(kf, 0, 2));
  EXPECT_FALSE(related(kf, 0, 1));
  const Complex l = lambda_of(kf, 0, 2);
  EXPECT_NEAR(std::abs(l - Complex(-1.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(p.lambda.at({0, 2}) - Complex(-1.0)), 0.0, 1e-9);
  try {
    lambda_of(kf, 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRelated);
  }
}

TEST(Partition, ConstantsAreOneClass) {
  const auto kf = kernel_family(InvariantSubspace::constants(named_group("symmetric:4")));
  const auto p = equivalence_partition(kf);
  EXPECT_EQ(p.classes, (std::vector<std::vector<Point>>{{0, 1, 2, 3}}));
  EXPECT_EQ(relation_stabilizer(kf, 0).subgroup.order(), 24u);
}

TEST(Partition, FullSpaceFreeActionIsAllSingletons) {
  const auto g = named_group("regular:symmetric:3");
  const auto kf = kernel_family(InvariantSubspace::full_space(g));
  const auto p = equivalence_partition(kf);
  EXPECT_EQ(p.classes.size(), 6u);
  for (Point x = 0; x < 6; ++x) EXPECT_TRUE(relation_stabilizer(kf, x).subgroup.is_trivial());
}

TEST(Stabilizers, CyclicFourHandTable) {
  // |K_0(y)| = |2 cos(pi y / 2)| equals c only at y in {0, 2}; so E(x) = {e, r^2}.
  const auto kf = c4_pair();
  const auto& g = kf.group();
  const Subgroup expected(g, rotations(g, {0, 2}));
  for (Point x = 0; x < 4; ++x) EXPECT_EQ(relation_stabilizer(kf, x).subgroup, expected);
  const auto t = stabilizer_table(kf);
  EXPECT_EQ(t.stabilizers[0], t.stabilizers[1]);
  EXPECT_FALSE(related(kf, 0, 1));
  EXPECT_EQ(t.normalizers[0].order(), 4u);
  const auto summary = self_normalizing_summary(kf, t);
  EXPECT_FALSE(summary.at_point[0]);
  EXPECT_FALSE(summary.everywhere);
  EXPECT_FALSE(summary.equal_stabilizers_imply_related);
  EXPECT_TRUE(summary.consistent());
}

TEST(Stabilizers, ClassSizeNeedsTrivialPointStabilizer) {
  // S_3 on three points, 2-dimensional part: K = 3I - J, so every class is a
  // singleton while E(x) is the order-2 point stabilizer.
  const auto g = named_group("symmetric:3");
  const auto kf = kernel_family(decompose(g, 1).parts[1]);
  const auto t = stabilizer_table(kf);
  for (Point x = 0; x < 3; ++x) {
    EXPECT_EQ(t.partition.classes[t.partition.class_of(x)].size(), 1u);
    EXPECT_EQ(t.stabilizers[x].order(), 2u);
  }
  const Report r = verify_class_nontriviality(kf);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.at("relation.class_size_iff_stabilizer_size").vacuous());
  EXPECT_FALSE(r.at("relation.class_size_is_stabilizer_index").vacuous());
}

TEST(Suites, AllLawsHoldOnTheMatrix) {
  for (const char* key : kMatrix) {
    const auto g = named_group(key);
    const auto parts = decompose(g, 1).parts;
    for (const auto& s : select_subspaces(g, parts, {SubspacePolicy::AllSumsUpToK, 2})) {
      const auto kf = kernel_family(s.subspace);
      const std::string where = std::string(key) + "/" + s.label;
      EXPECT_TRUE(verify_relation_characterizations(kf).passed()) << where;
      EXPECT_TRUE(verify_kernel_equality_criterion(kf).passed()) << where;
      EXPECT_TRUE(verify_class_nontriviality(kf).passed()) << where;
      EXPECT_TRUE(verify_stabilizer_laws(kf).passed()) << where;
      EXPECT_TRUE(verify_normalizer_laws(kf).passed()) << where;
    }
  }
}

TEST(Suites, NonTransitiveActionRejected) {
  const auto g = group_from_generators(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  const auto kf = kernel_family_unchecked(InvariantSubspace::full_space(g));
  EXPECT_THROW(verify_stabilizer_laws(kf), Error);
}
