#include <gtest/gtest.h>

#include "equisym/errors.hpp"
#include "equisym/matrix.hpp"
#include "equisym/mpoly.hpp"
#include "equisym/series.hpp"
#include "equisym/text.hpp"
#include "equisym/upoly.hpp"

using namespace equisym;

namespace {

const CycField Q = cyclo_field(1);

MPoly P(const std::string& s, const CycField& F = Q, int n = 2) { return text::parse_poly(s, F, n); }

UPoly U(std::initializer_list<long> c) {
  UPoly r(Q);
  for (long v : c) r.c.push_back(Q.from_int(v));
  r.trim();
  return r;
}

}  // namespace

TEST(MPolyGcd, Monomials) { EXPECT_EQ(mpoly_gcd(P("x^2*y"), P("x*y^2")), P("x*y")); }

TEST(MPolyGcd, OctahedralSquare) {
  MPoly g = P("x^5*y - x*y^5");
  EXPECT_EQ(mpoly_gcd(g * g, g), g);
  EXPECT_EQ(g * g, P("x^10*y^2 - 2*x^6*y^6 + x^2*y^10"));
}

TEST(MPolyGcd, Coprime) { EXPECT_EQ(mpoly_gcd(P("x^2 + y^2"), P("x")), P("1")); }

TEST(MPolyGcd, TernaryAndNonHomogeneous) {
  MPoly a = P("x^2 + y*z - 3*z^2", Q, 3), b = P("x - y + 2*z", Q, 3), c = P("x*y + z^2", Q, 3);
  MPoly g = mpoly_gcd(a * b, b * c);
  EXPECT_EQ(g, b.monic());
  MPoly u = P("x^2*y + 1", Q, 3), v = P("x - y^3 + z", Q, 3), w = P("y*z + x + 2", Q, 3);
  EXPECT_EQ(mpoly_gcd(u * v, v * w), v.monic());
  MPoly q;
  EXPECT_TRUE(divide_exact(u * v, v, &q));
  EXPECT_EQ(q, u);
  EXPECT_FALSE(divide_exact(u, v, &q));
}

TEST(MPolyGcd, OverCyclotomicField) {
  auto K = cyclo_field(4);
  MPoly a = P("x - z4*y", K), b = P("x + z4*y", K);
  EXPECT_EQ(mpoly_gcd(a * a * b, a * P("x + y", K)), a);
  EXPECT_EQ(a * b, P("x^2 + y^2", K));
}

TEST(UPolyFactor, Examples) {
  auto f = upoly_factor_q(U({-1, 0, 1}));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first.c[0].to_rational(), -1);
  EXPECT_EQ(upoly_factor_q(U({1, 0, 1})).size(), 1u);
  EXPECT_EQ(upoly_factor_q(U({-1, 0, 0, 0, 0, 0, 1})).size(), 4u);
  auto K = cyclo_field(4);
  UPoly g(K, {K.gen(), K.one()});
  EXPECT_THROW(upoly_factor_q(g), DomainError);
}

TEST(UPolyFactor, ProductReproducesInput) {
  UPoly p = U({3, -1, 0, 2}) * U({1, 1}) * U({1, 1}) * U({-2, 0, 0, 0, 1}) * U({5, 0, 7});
  UPoly prod(Q, {Q.one()});
  for (auto& [f, e] : upoly_factor_q(p)) {
    for (int k = 0; k < e; ++k) prod = prod * f;
    if (f.deg() > 3) EXPECT_EQ(upoly_factor_q(f).size(), 1u);
    if (f.deg() <= 3 && f.deg() > 1) EXPECT_TRUE(roots_in_field(f, Q).empty());
  }
  CycNum ratio = p.lead() / prod.lead();
  for (std::size_t i = 0; i < p.c.size(); ++i) EXPECT_EQ(p.c[i], prod.c[i] * ratio);
}

TEST(RootsInField, Examples) {
  auto K4 = cyclo_field(4), K6 = cyclo_field(6);
  auto r = roots_in_field(U({1, 0, 1}), K4);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE((r[0] == K4.gen() && r[1] == -K4.gen()) || (r[1] == K4.gen() && r[0] == -K4.gen()));
  auto s = roots_in_field(U({1, 1, 1}), K6);
  ASSERT_EQ(s.size(), 2u);
  for (const auto& x : s) EXPECT_TRUE(x == K6.zeta_pow(2) || x == K6.zeta_pow(4));
  EXPECT_TRUE(roots_in_field(U({-2, 0, 1}), K4).empty());
  EXPECT_EQ(roots_in_field(U({-2, 0, 1}) * U({3, -4}), Q).size(), 1u);
}

TEST(Series, Division) {
  auto one = TruncSeries::from_ints(Q, 5, {1});
  EXPECT_EQ(series_div(one, TruncSeries::from_ints(Q, 5, {1, -1})).integer_coeffs(), (std::vector<long>{1, 1, 1, 1, 1}));
  auto sq = TruncSeries::from_ints(Q, 4, {1, -2, 1});
  EXPECT_EQ(series_div(TruncSeries::from_ints(Q, 4, {1}), sq).integer_coeffs(), (std::vector<long>{1, 2, 3, 4}));
  auto num = TruncSeries::from_ints(Q, 20, {0, 1, 0, -1, 0, 1, 0, -1, 0, 1});
  auto den = TruncSeries::from_ints(Q, 20, {1, 0, -1, 0, 1, 0, -2, 0, 1, 0, -1, 0, 1});
  auto q = series_div(num, den).integer_coeffs();
  EXPECT_EQ(q[1], 1);
  EXPECT_EQ(q[7], 1);
  EXPECT_EQ(q[9], 1);
  EXPECT_EQ(q[11], 1);
  EXPECT_EQ(q[3], 0);
  EXPECT_EQ(q[5], 0);
  EXPECT_EQ((series_div(num, den) * den), num);
  EXPECT_THROW(series_div(one, TruncSeries::from_ints(Q, 5, {0, 1})), DomainError);
}

TEST(Series, Text) {
  EXPECT_EQ(TruncSeries::from_ints(Q, 5, {1, 0, 2, -1}).to_string(), "1 + 2*t^2 - t^3 + O(t^5)");
}

TEST(Matrix, Inverse) {
  auto K = cyclo_field(4);
  auto I = FMatrix::identity(K, 3);
  EXPECT_EQ(I.inverse(), I);
  auto D = FMatrix::diag(K, {K.gen(), -K.gen(), K.one()});
  EXPECT_EQ(D.inverse(), FMatrix::diag(K, {-K.gen(), K.gen(), K.one()}));
  FMatrix S(Q, 2, {Q.zero(), Q.one(), Q.one(), Q.zero()});
  EXPECT_EQ(S.inverse(), S);
  FMatrix Z(Q, 2, {Q.one(), Q.one(), Q.one(), Q.one()});
  EXPECT_THROW(Z.inverse(), DomainError);
}

TEST(Matrix, JordanBlockHasInfiniteOrder) {
  FMatrix J(Q, 3, {Q.one(), Q.one(), Q.zero(), Q.zero(), Q.one(), Q.one(), Q.zero(), Q.zero(), Q.one()});
  for (long n = 1; n <= 20; ++n) {
    FMatrix Jn = J.pow(n);
    EXPECT_EQ(Jn.at(0, 1).to_rational(), n);
    EXPECT_EQ(Jn.at(1, 2).to_rational(), n);
    EXPECT_EQ(Jn.at(0, 2).to_rational(), n * (n - 1) / 2);
    EXPECT_FALSE(Jn.is_identity());
    EXPECT_FALSE(Jn.is_scalar());
  }
}

TEST(Text, RoundTripAndErrors) {
  auto K = cyclo_field(text::infer_conductor("[z3*x^2 + y^2, 1/2*x*y]"));
  EXPECT_EQ(K.conductor(), 3u);
  auto f = text::parse_tuple("[z3*x^2 + y^2, 1/2*x*y]", K);
  EXPECT_EQ(text::parse_tuple(text::tuple_to_string(f), K), f);
  EXPECT_EQ(text::parse_tuple("(2x^3+xy^2 : 2y^3+yz^2 : x^2z+2z^3)", Q)[0], P("2*x^3 + x*y^2", Q, 3));
  try {
    text::parse_tuple("[x^2, y^2 + , z^2]", Q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 12u);
  }
  EXPECT_THROW(text::parse_tuple("[x^2, z^2]", Q), ParseError);
  EXPECT_EQ(text::parse_cyc("1/2*z^3 - 2", cyclo_field(5)).to_string(), "1/2*z^3 - 2");
}
