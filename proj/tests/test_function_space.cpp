#include <gtest/gtest.h>

#include "gkern/error.hpp"
#include "gkern/function_space.hpp"

using namespace gkern;

namespace {
const Complex I{0.0, 1.0};
}

TEST(InnerProduct, UsesUniformWeight) {
  const FunctionOnX f{1.0, I};
  const FunctionOnX g{1.0, 1.0};
  const Complex ip = inner_product(f, g);
  EXPECT_NEAR(ip.real(), 0.5, 1e-15);
  EXPECT_NEAR(ip.imag(), 0.5, 1e-15);
  EXPECT_NEAR(norm_squared(f), 1.0, 1e-15);
}

TEST(InnerProduct, LengthMismatchThrows) {
  try {
    inner_product(FunctionOnX::zero(2), FunctionOnX::zero(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
}

TEST(Translate, ShiftsByTheCycle) {
  const FunctionOnX f{1.0, 2.0, 3.0};
  const auto h = translate(f, Permutation({1, 2, 0}));
  // h(x) = f(alpha x)
  EXPECT_EQ(h(0), Complex(2.0));
  EXPECT_EQ(h(1), Complex(3.0));
  EXPECT_EQ(h(2), Complex(1.0));
  EXPECT_THROW(translate(f, Permutation({1, 0})), Error);
}

TEST(Integrate, ConstantsAndIndicators) {
  EXPECT_NEAR(std::abs(integrate(FunctionOnX::constant(5, 2.0)) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(integrate(FunctionOnX::indicator(4, 1)) - 0.25), 0.0, 1e-15);
}

TEST(InvarianceLemma, HoldsOnSeveralGroups) {
  for (const char* key : {"cyclic:5", "dihedral:4", "symmetric:4", "regular:symmetric:3"}) {
    const Report r = verify_invariance_lemma(named_group(key), 4, 11);
    EXPECT_TRUE(r.passed()) << key;
    for (const auto& c : r.checks) EXPECT_FALSE(c.vacuous()) << key << " " << c.law;
  }
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 8; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    (void)c;
  }
  EXPECT_NE(Rng(42).next_u64(), Rng(43).next_u64());
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
}
