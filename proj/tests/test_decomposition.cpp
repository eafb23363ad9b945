#include <gtest/gtest.h>

#include <algorithm>

#include "gkern/decomposition.hpp"
#include "gkern/error.hpp"
#include "oracles.hpp"

using namespace gkern;

namespace {

std::vector<std::size_t> dims(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (const auto& p : d.parts) out.push_back(p.dim());
  return out;
}

double distance(const ComplexMatrix& a, const oracle::Dense& b, double scale) {
  double worst = 0.0;
  for (Eigen::Index y = 0; y < a.rows(); ++y) {
    for (Eigen::Index x = 0; x < a.cols(); ++x) {
      worst = std::max(worst, std::abs(scale * a(y, x) - b[y][x]));
    }
  }
  return worst;
}

}  // namespace

TEST(PermMatrix, MovesValuesByTheInverse) {
  const Permutation a({1, 2, 0});
  const ComplexMatrix m = perm_matrix(a);
  ComplexVector f(3);
  f << 10.0, 20.0, 30.0;
  const ComplexVector g = m * f;
  // (M f)(x) = f(a^-1 x); a^-1 = [2,0,1]
  EXPECT_EQ(g(0), Complex(30.0));
  EXPECT_EQ(g(1), Complex(10.0));
}

TEST(Eigen, PauliXEigenvalues) {
  ComplexMatrix x(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  const auto e = hermitian_eigendecomposition(x);
  EXPECT_NEAR(e.values(0), -1.0, 1e-12);
  EXPECT_NEAR(e.values(1), 1.0, 1e-12);
  ComplexMatrix bad(2, 2);
  bad << 0.0, 1.0, 0.0, 0.0;
  EXPECT_THROW(hermitian_eigendecomposition(bad), Error);
}

TEST(Decompose, CyclicPartsAreCharacterProjections) {
  for (int n : {4, 5, 6}) {
    const auto g = named_group("cyclic:" + std::to_string(n));
    const auto d = decompose(g, 1);
    ASSERT_EQ(d.parts.size(), static_cast<std::size_t>(n));
    // Every character projection appears exactly once.
    for (int j = 0; j < n; ++j) {
      const auto k = oracle::cyclic_character_kernel(n, {j});
      int hits = 0;
      for (const auto& p : d.parts) hits += distance(p.projection(), k, n) < 1e-9;
      EXPECT_EQ(hits, 1) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Decompose, CyclicFourCanonicalOrder) {
  // chi_0, chi_1, chi_-1, chi_2
  const auto d = decompose(named_group("cyclic:4"), 5);
  EXPECT_LT(distance(d.parts[0].projection(), oracle::cyclic_character_kernel(4, {0}), 4), 1e-9);
  EXPECT_LT(distance(d.parts[1].projection(), oracle::cyclic_character_kernel(4, {1}), 4), 1e-9);
  EXPECT_LT(distance(d.parts[2].projection(), oracle::cyclic_character_kernel(4, {3}), 4), 1e-9);
  EXPECT_LT(distance(d.parts[3].projection(), oracle::cyclic_character_kernel(4, {2}), 4), 1e-9);
}

TEST(Decompose, SymmetricThreeNatural) {
  const auto g = named_group("symmetric:3");
  const auto d = decompose(g, 1);
  EXPECT_EQ(dims(d), (std::vector<std::size_t>{1, 2}));
  // Explicit projections: J/3 and I - J/3.
  for (Eigen::Index y = 0; y < 3; ++y) {
    for (Eigen::Index x = 0; x < 3; ++x) {
      EXPECT_NEAR(std::abs(d.parts[0].projection()(y, x) - 1.0 / 3.0), 0.0, 1e-10);
      EXPECT_NEAR(std::abs(d.parts[1].projection()(y, x) - ((x == y) - 1.0 / 3.0)), 0.0, 1e-10);
    }
  }
  EXPECT_TRUE(is_irreducible(d.parts[1], 3, 9));
  const auto sum = sum_subspaces(d.parts);
  EXPECT_FALSE(is_irreducible(sum, 3, 9));
  EXPECT_LT((sum.projection() - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Decompose, EveryPartIsCertified) {
  for (const char* key : {"dihedral:4", "symmetric:4", "regular:symmetric:3", "dihedral:5"}) {
    const auto d = decompose(named_group(key), 3);
    ComplexMatrix total = ComplexMatrix::Zero(d.parts[0].degree(), d.parts[0].degree());
    for (const auto& p : d.parts) {
      EXPECT_TRUE(certify(p).passed()) << key;
      EXPECT_TRUE(is_irreducible(p, 3, 4)) << key;
      total += p.projection();
    }
    EXPECT_LT((total - ComplexMatrix::Identity(total.rows(), total.cols())).cwiseAbs().maxCoeff(),
              1e-9)
        << key;
  }
}

TEST(Decompose, RegularRepresentationDims) {
  // 1 + 1 + 2 + 2: the 2-dimensional irreducible appears twice.
  EXPECT_EQ(dims(decompose(named_group("regular:symmetric:3"), 1)),
            (std::vector<std::size_t>{1, 1, 2, 2}));
}

TEST(Decompose, SeedDoesNotChangeTheResult) {
  for (const char* key : {"cyclic:6", "dihedral:4", "symmetric:4"}) {
    const auto g = named_group(key);
    const auto a = decompose(g, 1);
    const auto b = decompose(g, 2);
    ASSERT_EQ(dims(a), dims(b)) << key;
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
      EXPECT_LT((a.parts[i].projection() - b.parts[i].projection()).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Certify, CatchesACorruptedProjection) {
  const auto g = named_group("cyclic:4");
  const auto h = decompose(g, 1).parts[1];
  ComplexMatrix p = h.projection();
  p(0, 1) += 1e-3;
  const Report r = certify(h.with_projection(p));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.at("subspace.projection_hermitian").passed);
}

TEST(Certify, NonInvariantSubspaceFails) {
  const auto g = named_group("cyclic:3");
  ComplexMatrix b = ComplexMatrix::Zero(3, 1);
  b(0, 0) = 1.0;
  const Report r = certify(InvariantSubspace::from_basis(g, b));
  EXPECT_FALSE(r.at("subspace.group_invariance").passed);
}

TEST(Sum, RejectsOverlappingParts) {
  const auto d = decompose(named_group("cyclic:3"), 1);
  try {
    sum_subspaces({d.parts[0], d.parts[0]});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOrthogonal);
  }
}

TEST(Select, PoliciesAndLabels) {
  const auto g = named_group("cyclic:4");
  const auto parts = decompose(g, 1).parts;
  EXPECT_EQ(select_subspaces(g, parts, {SubspacePolicy::EachMinimal, 1}).size(), 4u);
  const auto sums = select_subspaces(g, parts, {SubspacePolicy::AllSumsUpToK, 2});
  ASSERT_EQ(sums.size(), 10u);
  EXPECT_EQ(sums[4].label, "0+1");
  EXPECT_EQ(sums[9].label, "2+3");
  const auto full = select_subspaces(g, parts, {SubspacePolicy::FullSpace, 1});
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].label, "full");
  EXPECT_THROW(select_subspaces(g, parts, {SubspacePolicy::AllSumsUpToK, 5}), Error);
  EXPECT_EQ(parse_subspace_policy("all-sums-up-to-k"), SubspacePolicy::AllSumsUpToK);
  EXPECT_THROW(parse_subspace_policy("some"), Error);
}

TEST(Digest, StableAndSensitive) {
  const auto g = named_group("cyclic:4");
  const auto a = decompose(g, 1).parts[1];
  EXPECT_EQ(projection_digest(a), projection_digest(decompose(g, 1).parts[1]));
  EXPECT_EQ(projection_digest(a).size(), 64u);
  EXPECT_NE(projection_digest(a), projection_digest(decompose(g, 1).parts[2]));
}
