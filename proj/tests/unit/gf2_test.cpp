#include <gtest/gtest.h>

#include "deltaflip/errors.hpp"
#include "deltaflip/gf2.hpp"
#include "testkit.hpp"

using namespace deltaflip;
using namespace testkit;

namespace {

Subset apply(const Gf2Matrix& a, Subset v) {
  Subset out = 0;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (cardinality(a.rows()[i] & v) % 2) out |= singleton(i);
  }
  return out;
}

Gf2Matrix triangle_matrix() {
  return Gf2Matrix(GroundSet({"p", "q", "r"}), {0b111, 0b101, 0b111});
}

}  // namespace

TEST(Gf2Matrix, Validation) {
  EXPECT_THROW(Gf2Matrix(GroundSet::numbered(2), {0b01}), DomainError);
  EXPECT_THROW(Gf2Matrix(GroundSet::numbered(2), {0b01, 0b100}), DomainError);
  const Gf2Matrix a = triangle_matrix();
  EXPECT_TRUE(a.is_symmetric());
  EXPECT_EQ(a.diagonal(), Subset{0b101});
  EXPECT_EQ(a.toggle_diagonal(0b111).diagonal(), Subset{0b010});
  const Gf2Matrix sub = a.principal(0b101);
  EXPECT_EQ(sub.n(), 2u);
  EXPECT_EQ(sub.rows(), (std::vector<Subset>{0b11, 0b11}));
  EXPECT_EQ(sub.ground().label(1), "r");
}

TEST(Gf2Rank, Examples) {
  EXPECT_EQ(gf2_rank(std::vector<Subset>{}), 0);
  EXPECT_EQ(gf2_rank(std::vector<Subset>{0b011, 0b110, 0b101}), 2);
  EXPECT_EQ(gf2_rank(std::vector<Subset>{0b001, 0b010, 0b100}), 3);
}

TEST(DetNullity, Examples) {
  const Gf2Matrix a = triangle_matrix();
  EXPECT_EQ(det_nullity(a, 0), (DetNullity{true, 0}));
  EXPECT_EQ(det_nullity(a, 0b111), (DetNullity{false, 1}));
  EXPECT_EQ(det_nullity(a, 0b010), (DetNullity{false, 1}));
  EXPECT_EQ(det_nullity(Gf2Matrix::identity(GroundSet::numbered(4)), 0b1111), (DetNullity{true, 0}));
  EXPECT_EQ(det_nullity(Gf2Matrix::zero(GroundSet::numbered(4)), 0b1011), (DetNullity{false, 3}));
}

TEST(Support, Examples) {
  EXPECT_EQ(support_set_system(triangle_matrix()), m0());
  EXPECT_EQ(support_set_system(Gf2Matrix::zero(GroundSet::numbered(3))), make(3, {0}));
  EXPECT_EQ(support_set_system(Gf2Matrix::identity(GroundSet::numbered(3))).size(), 8u);
  EXPECT_THROW(support_set_system(Gf2Matrix::zero(GroundSet::numbered(21))), SizeGuardError);
}

TEST(Ppt, Examples) {
  const Gf2Matrix a = triangle_matrix();
  EXPECT_EQ(ppt(a, 0), a);
  EXPECT_THROW(ppt(a, 0b010), PivotUndefinedError);
  EXPECT_THROW(ppt(a, 0b111), PivotUndefinedError);
  // pivot on the looped vertex p
  const Gf2Matrix b = ppt(a, 0b001);
  EXPECT_EQ(b.rows(), (std::vector<Subset>{0b111, 0b011, 0b001}));
}

TEST(KernelBasis, Examples) {
  const BinaryMatrix r{GroundSet::numbered(3), {0b111}};
  const auto k = kernel_basis(r);
  EXPECT_EQ(k.size(), 2u);
  for (Subset v : k) EXPECT_EQ(cardinality(v) % 2, 0);
  EXPECT_EQ(kernel_basis(r, 0b001).size(), 0u);
  EXPECT_THROW((BinaryMatrix{GroundSet::numbered(2), {0b100}}.validate()), DomainError);
  EXPECT_THROW((BinaryMatrix{GroundSet::numbered(2), {0b01}}.to_square()), DomainError);
}

// ---- properties ----

TEST(Gf2Property, NullityMatchesKernelCount) {
  Rng rng(51);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 0, 7));
    const Gf2Matrix a = random_square(rng, n);
    const Subset x = random_subset(rng, n);
    const DetNullity dn = det_nullity(a, x);
    EXPECT_EQ(dn.nullity, o_nullity(a.rows(), x));
    EXPECT_EQ(dn.det, dn.nullity == 0);
  }
}

TEST(Gf2Property, KernelBasisSpansKernel) {
  Rng rng(52);
  for (int t = 0; t < 200; ++t) {
    const std::size_t cols = static_cast<std::size_t>(pick(rng, 1, 8));
    const BinaryMatrix r = random_binary_matrix(rng, static_cast<std::size_t>(pick(rng, 0, 5)), cols);
    const auto k = kernel_basis(r);
    EXPECT_EQ(static_cast<int>(k.size()), static_cast<int>(cols) - r.rank());
    EXPECT_EQ(gf2_rank(k), static_cast<int>(k.size()));
    for (Subset v : k) {
      for (Subset row : r.rows) EXPECT_EQ(cardinality(row & v) % 2, 0);
    }
  }
}

TEST(PptProperty, ExchangeIdentity) {
  // A (x1; x2) = (y1; y2)  iff  A*X (y1; x2) = (x1; y2)
  Rng rng(53);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 6));
    const Gf2Matrix a = random_square(rng, n);
    const Subset x = random_subset(rng, n);
    if (!det_nullity(a, x).det) {
      EXPECT_THROW(ppt(a, x), PivotUndefinedError);
      continue;
    }
    const Gf2Matrix b = ppt(a, x);
    for (Subset v = 0; v <= full_subset(n); ++v) {
      const Subset w = apply(a, v);
      const Subset in = (w & x) | (v & ~x);
      const Subset out = (v & x) | (w & ~x);
      ASSERT_EQ(apply(b, in), out);
    }
    EXPECT_EQ(ppt(b, x), a);
    EXPECT_EQ(support_set_system(b), pivot(support_set_system(a), x));
    if (a.is_symmetric()) EXPECT_TRUE(b.is_symmetric());
  }
}

TEST(PptProperty, Composition) {
  Rng rng(54);
  int checked = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 6));
    const Gf2Matrix a = random_symmetric(rng, n);
    const Subset x = random_subset(rng, n);
    const Subset y = random_subset(rng, n);
    if (!det_nullity(a, x).det) continue;
    const Gf2Matrix b = ppt(a, x);
    if (!det_nullity(b, y).det) continue;
    EXPECT_EQ(ppt(b, y), ppt(a, x ^ y));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(PptProperty, InverseOnFullSet) {
  Rng rng(55);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 7));
    const Gf2Matrix a = random_square(rng, n);
    if (!det_nullity(a, a.ground().full()).det) continue;
    const Gf2Matrix inv = ppt(a, a.ground().full());
    EXPECT_EQ(o_multiply(a.rows(), inv.rows()), Gf2Matrix::identity(a.ground()).rows());
  }
}
