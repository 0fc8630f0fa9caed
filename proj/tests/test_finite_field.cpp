#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "rankmetric/finite_field.hpp"
#include "rankmetric/rng.hpp"

using namespace rankmetric;

namespace {

std::vector<FieldElement> all_elements(const Field& f) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < f->m(); ++i) total *= f->q();
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(FieldElement::from_index(f, i));
  return out;
}

std::uint32_t bits_of(const FieldElement& a) {
  std::uint32_t b = 0;
  for (std::size_t i = 0; i < a.coords().size(); ++i) b |= a.coords()[i] << i;
  return b;
}

// Fields with q^m <= 64.
std::vector<Field> small_fields() {
  return {field_new(2, 1), field_new(2, 2), field_new(2, 3), field_new(2, 4), field_new(2, 5), field_new(2, 6),
          field_new(3, 1), field_new(3, 2), field_new(3, 3), field_new(5, 2), field_new(7, 2)};
}

}  // namespace

TEST(FieldNew, PrimeFieldHasDegreeOneModulus) {
  const Field f = field_new(2, 1);
  EXPECT_EQ(f->m(), 1u);
  EXPECT_EQ(f->modulus(), (Poly{0, 1}));
}

TEST(FieldNew, DefaultQuarticIsLeastIrreducible) {
  // Exhaustive scan of all 16 monic quartics over F_2, ordered by their bitmask.
  std::vector<std::uint32_t> irreducible;
  for (std::uint32_t low = 0; low < 16; ++low) {
    const std::uint32_t mask = 16 | low;
    bool reducible = false;
    // Try every monic divisor of degree 1 or 2.
    for (std::uint32_t g = 2; g < 8 && !reducible; ++g) {
      std::uint32_t r = mask;
      const int dg = g >= 4 ? 2 : 1;
      for (int i = 4; i >= dg; --i)
        if ((r >> i) & 1u) r ^= g << (i - dg);
      reducible = r == 0;
    }
    if (!reducible) irreducible.push_back(mask);
  }
  ASSERT_EQ(irreducible.size(), 3u);  // x^4+x+1, x^4+x^3+1, x^4+x^3+x^2+x+1
  const Field f = field_new(2, 4);
  std::uint32_t got = 0;
  for (std::size_t i = 0; i < f->modulus().size(); ++i) got |= f->modulus()[i] << i;
  EXPECT_EQ(got, irreducible.front());
  EXPECT_EQ(got, 0x13u);
}

TEST(FieldNew, RejectsNonPrimeQ) {
  EXPECT_THROW(field_new(4, 2), InvalidArgument);
  EXPECT_THROW(field_new(1, 2), InvalidArgument);
  EXPECT_THROW(field_new(9, 1), InvalidArgument);
}

TEST(FieldNew, RejectsBadModulus) {
  EXPECT_THROW(field_new(2, 2, Poly{1, 0, 1}), InvalidArgument);     // (x+1)^2
  EXPECT_THROW(field_new(2, 2, Poly{1, 1, 1, 0}), InvalidArgument);  // wrong degree
  EXPECT_THROW(field_new(2, 2, Poly{1, 1, 0}), InvalidArgument);     // not monic
  EXPECT_THROW(field_new(3, 2, Poly{2, 0, 1}), InvalidArgument);     // x^2-1 = (x-1)(x+1)
}

TEST(FieldNew, AcceptsExplicitIrreducible) {
  const Field f = field_new(2, 4, Poly{1, 0, 0, 1, 1});
  EXPECT_EQ(f->m(), 4u);
  const Field g = field_new(3, 2, Poly{2, 2, 1});  // x^2 + 2x + 2 is irreducible over F_3
  EXPECT_EQ(g->q(), 3u);
}

TEST(FieldNew, DeterministicConstruction) {
  for (auto [q, m] : std::vector<std::pair<Residue, std::size_t>>{{2, 8}, {3, 5}, {5, 3}, {2, 32}})
    EXPECT_EQ(field_new(q, m)->modulus(), field_new(q, m)->modulus());
}

TEST(FieldArithmetic, InverseOfOne) {
  const Field f = field_new(2, 4);
  EXPECT_EQ(inv(FieldElement::one(f)), FieldElement::one(f));
}

TEST(FieldArithmetic, XSquaredInF4) {
  const Field f = field_new(2, 2);
  ASSERT_EQ(f->modulus(), (Poly{1, 1, 1}));
  const auto x = FieldElement::monomial(f, 1);
  EXPECT_EQ(x * x, FieldElement(f, {1, 1}));
}

TEST(FieldArithmetic, EveryNonzeroElementOfF16HasInverse) {
  const Field f = field_new(2, 4);
  int checked = 0;
  for (const auto& a : all_elements(f)) {
    if (a.is_zero()) continue;
    EXPECT_EQ(a * inv(a), FieldElement::one(f));
    ++checked;
  }
  EXPECT_EQ(checked, 15);
}

TEST(FieldArithmetic, MultiplicationMatchesCarrylessOracle) {
  const Field f = field_new(2, 5);
  std::uint32_t mod = 0;
  for (std::size_t i = 0; i < f->modulus().size(); ++i) mod |= f->modulus()[i] << i;
  for (const auto& a : all_elements(f))
    for (const auto& b : all_elements(f)) EXPECT_EQ(bits_of(a * b), oracle::gf2_mul(bits_of(a), bits_of(b), mod, 5));
}

TEST(FieldArithmetic, ZeroHasNoInverse) {
  EXPECT_THROW(inv(FieldElement::zero(field_new(3, 2))), InvalidArgument);
}

TEST(FieldArithmetic, MismatchedFieldsRejected) {
  const auto a = FieldElement::one(field_new(2, 3));
  const auto b = FieldElement::one(field_new(2, 4));
  EXPECT_THROW(a + b, InvalidArgument);
  EXPECT_THROW(a * b, InvalidArgument);
  const auto c = FieldElement::one(field_new(2, 3, Poly{1, 0, 1, 1}));
  EXPECT_THROW(a * c, InvalidArgument);  // same q, m but a different modulus
}

TEST(FieldArithmetic, SeparatelyBuiltParamsInteroperate) {
  const auto a = FieldElement::monomial(field_new(2, 4), 1);
  const auto b = FieldElement::monomial(field_new(2, 4), 2);
  EXPECT_EQ(a * b, FieldElement::monomial(field_new(2, 4), 3));
}

TEST(FieldAxioms, ExhaustiveForSmallFields) {
  for (const Field& f : small_fields()) {
    const auto elems = all_elements(f);
    const auto zero = FieldElement::zero(f), one = FieldElement::one(f);
    for (const auto& a : elems) {
      EXPECT_EQ(a + zero, a);
      EXPECT_EQ(a * one, a);
      EXPECT_EQ(a + (-a), zero);
      if (!a.is_zero()) {
        EXPECT_EQ(a * inv(a), one);
      }
      for (const auto& b : elems) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - b, a + (-b));
      }
    }
    for (const auto& a : elems)
      for (const auto& b : elems) {
        const auto ab = a * b, a_plus_b = a + b;
        for (const auto& c : elems) {
          EXPECT_EQ(a_plus_b + c, a + (b + c));
          EXPECT_EQ(ab * c, a * (b * c));
          EXPECT_EQ(a * (b + c), ab + a * c);
        }
      }
  }
}

TEST(FieldAxioms, MultiplicativeGroupIsCyclic) {
  for (const Field& f : small_fields()) {
    const auto elems = all_elements(f);
    const std::uint64_t order = elems.size() - 1;
    bool found = false;
    for (const auto& a : elems) {
      if (a.is_zero()) continue;
      std::uint64_t k = 1;
      FieldElement p = a;
      while (!(p == FieldElement::one(f))) {
        p *= a;
        ++k;
      }
      if (k == order) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << f->describe();
  }
}

TEST(Frobenius, IdentityAtZeroAndM) {
  const Field f = field_new(2, 4);
  for (const auto& a : all_elements(f)) {
    EXPECT_EQ(frobenius(a, 0), a);
    EXPECT_EQ(frobenius(a, 4), a);
  }
}

TEST(Frobenius, MatchesRepeatedPowering) {
  for (const Field& f : small_fields())
    for (const auto& a : all_elements(f)) {
      std::uint64_t e = 1;
      for (std::size_t i = 0; i <= f->m(); ++i) {
        EXPECT_EQ(frobenius(a, i), pow(a, e));
        e *= f->q();
      }
    }
}

TEST(Frobenius, IteratedMTimesIsIdentity) {
  for (const Field& f : small_fields())
    for (const auto& a : all_elements(f)) {
      FieldElement b = a;
      for (std::size_t i = 0; i < f->m(); ++i) b = frobenius(b, 1);
      EXPECT_EQ(b, a);
    }
}

TEST(Frobenius, AdditiveOnF16) {
  const Field f = field_new(2, 4);
  const auto elems = all_elements(f);
  for (const auto& a : elems)
    for (const auto& b : elems) EXPECT_EQ(frobenius(a + b, 1), frobenius(a, 1) + frobenius(b, 1));
}

TEST(Frobenius, FixesBaseField) {
  const Field f = field_new(5, 3);
  for (Residue s = 0; s < 5; ++s) EXPECT_EQ(frobenius(FieldElement::from_base(f, s), 1), FieldElement::from_base(f, s));
}

namespace {

Basis random_basis(const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  while (true) {
    std::vector<FieldElement> e;
    for (std::size_t i = 0; i < f->m(); ++i) {
      std::vector<Residue> c(f->m());
      for (auto& v : c) v = static_cast<Residue>(rng.below(f->q()));
      e.emplace_back(f, c);
    }
    try {
      return Basis(e);
    } catch (const InvalidArgument&) {
    }
  }
}

}  // namespace

TEST(Expand, ZeroIsZeroVector) {
  const Field f = field_new(2, 4);
  const Basis b = random_basis(f, 3);
  EXPECT_EQ(expand(FieldElement::zero(f), b), std::vector<Residue>(4, 0));
}

TEST(Expand, BasisElementIsUnitVector) {
  const Field f = field_new(2, 4);
  const Basis b = random_basis(f, 5);
  EXPECT_EQ(expand(b.elements()[1], b), (std::vector<Residue>{0, 1, 0, 0}));
}

TEST(Expand, RoundTripUnderRandomBases) {
  for (const Field& f : small_fields())
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Basis b = random_basis(f, seed);
      std::set<std::vector<Residue>> images;
      for (const auto& a : all_elements(f)) {
        const auto c = expand(a, b);
        EXPECT_EQ(combine(c, b), a);
        images.insert(c);
      }
      EXPECT_EQ(images.size(), all_elements(f).size());  // bijection
    }
}

TEST(Expand, RejectsDependentBasis) {
  const Field f = field_new(2, 3);
  const auto x = FieldElement::monomial(f, 1);
  EXPECT_THROW(Basis({x, x, FieldElement::one(f)}), InvalidArgument);
  EXPECT_THROW(Basis({x, FieldElement::one(f)}), InvalidArgument);
}

TEST(Expand, RejectsForeignBasis) {
  const Basis b = Basis::polynomial(field_new(2, 3));
  EXPECT_THROW(expand(FieldElement::one(field_new(2, 4)), b), InvalidArgument);
}
