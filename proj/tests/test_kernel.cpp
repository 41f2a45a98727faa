#include <gtest/gtest.h>

#include "equisym/cyclotomic.hpp"
#include "equisym/errors.hpp"
#include "equisym/zpoly.hpp"

using namespace equisym;

namespace {

zpoly::ZPoly zp(std::initializer_list<long> c) {
  zpoly::ZPoly r;
  for (long v : c) r.push_back(v);
  return r;
}

}  // namespace

TEST(Cyclotomic, MinimalPolynomials) {
  EXPECT_EQ(cyclo_field(1).modulus(), zp({-1, 1}));
  EXPECT_EQ(cyclo_field(4).modulus(), zp({1, 0, 1}));
  EXPECT_EQ(cyclo_field(8).modulus(), zp({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclo_field(12).modulus(), zp({1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclo_field(0), DomainError);
}

TEST(Cyclotomic, Inverse) {
  auto K4 = cyclo_field(4);
  EXPECT_EQ(cyc_inverse(K4.gen()), -K4.gen());
  EXPECT_EQ(cyc_inverse(K4.from_int(2)), K4.from_rational(Rational(1, 2)));
  auto K3 = cyclo_field(3);
  EXPECT_EQ(cyc_inverse(K3.one() + K3.gen()), -K3.gen());
  EXPECT_THROW(cyc_inverse(K3.zero()), DomainError);
}

TEST(Cyclotomic, ZetaOrderAndInverseInvolution) {
  for (unsigned m : {1u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 20u, 21u}) {
    auto K = cyclo_field(m);
    EXPECT_TRUE(K.gen().pow(m).is_one()) << m;
    CycNum a = K.from_int(3) + K.gen() * K.from_rational(Rational(2, 7)) + K.zeta_pow(m / 2 + 1);
    EXPECT_EQ(cyc_inverse(cyc_inverse(a)), a);
    EXPECT_TRUE((a * cyc_inverse(a)).is_one());
  }
}

TEST(Cyclotomic, RootsOfUnityInOddConductor) {
  auto K = cyclo_field(3);
  CycNum z6 = K.root_of_unity(6, 1);
  EXPECT_TRUE(z6.pow(6).is_one());
  EXPECT_FALSE(z6.pow(3).is_one());
  EXPECT_FALSE(z6.pow(2).is_one());
}

TEST(Cyclotomic, TextForm) {
  auto K = cyclo_field(5);
  CycNum a = K.zeta_pow(3) * K.from_rational(Rational(1, 2)) - K.from_int(2);
  EXPECT_EQ(a.to_string(), "1/2*z^3 - 2");
  EXPECT_EQ((-K.gen()).to_string(), "-z");
}

TEST(Cyclotomic, GaloisAndEmbed) {
  auto K5 = cyclo_field(5);
  CycNum s5 = K5.gen() - K5.zeta_pow(2) - K5.zeta_pow(3) + K5.zeta_pow(4);
  EXPECT_EQ(s5 * s5, K5.from_int(5));
  EXPECT_EQ(s5.galois(2), -s5);
  EXPECT_EQ(s5.norm(), Rational(25));
  auto K20 = cyclo_field(20);
  CycNum e = embed(s5, K20);
  EXPECT_EQ(e * e, K20.from_int(5));
}

TEST(ZPoly, FactorSixthRootsOfUnity) {
  auto f = zpoly::factor(zp({-1, 0, 0, 0, 0, 0, 1}));
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[0].first, zp({-1, 1}));
  EXPECT_EQ(f[1].first, zp({1, 1}));
  EXPECT_EQ(f[2].first, zp({1, -1, 1}));
  EXPECT_EQ(f[3].first, zp({1, 1, 1}));
}

TEST(ZPoly, FactorIrreducibleAndMultiplicity) {
  auto f = zpoly::factor(zp({1, 0, 1}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].second, 1);
  auto g = zpoly::factor(zpoly::mul(zp({-1, 1}), zpoly::mul(zp({-1, 1}), zp({2, 0, 0, 1}))));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].first, zp({-1, 1}));
  EXPECT_EQ(g[0].second, 2);
  EXPECT_EQ(g[1].first, zp({2, 0, 0, 1}));
}

TEST(ZPoly, FactorSwinnertonDyer) {
  // x^8 - 40x^6 + 352x^4 - 960x^2 + 576 is irreducible but splits mod every prime.
  auto f = zpoly::factor(zp({576, 0, -960, 0, 352, 0, -40, 0, 1}));
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(zpoly::deg(f[0].first), 8);
}

TEST(ZPoly, GcdAndLowDegreeFactors) {
  auto a = zpoly::mul(zp({1, 0, 1}), zp({-3, 2}));
  auto b = zpoly::mul(zp({1, 0, 1}), zp({5, 0, 0, 1}));
  EXPECT_EQ(zpoly::gcd(a, b), zp({1, 0, 1}));
  auto p = zpoly::mul(zpoly::mul(zp({1, 0, 4}), zp({3, 3, 1})), zpoly::mul(zp({-3, 2}), zp({2, 0, 0, 1})));
  auto lf = zpoly::low_degree_factors(p);
  ASSERT_EQ(lf.size(), 3u);
}
