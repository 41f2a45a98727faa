#include <gtest/gtest.h>

#include "equisym/errors.hpp"
#include "equisym/invariants.hpp"
#include "equisym/text.hpp"

using namespace equisym;

namespace {

MatrixGroup lift(const std::string& spec) { return linear_closure(catalog(spec).lift); }

MPoly parse_poly(const std::string& s) { return text::parse_poly(s, cyclo_field(1), 2); }
MapTuple parse_tuple(const std::string& s) { return text::parse_tuple(s, cyclo_field(1)); }

std::vector<long> ints(const TruncSeries& s) { return s.integer_coeffs(); }

std::vector<long> coeffs(int prec, std::initializer_list<std::pair<int, long>> terms) {
  std::vector<long> c(static_cast<std::size_t>(prec), 0);
  for (auto [k, v] : terms) c[static_cast<std::size_t>(k)] = v;
  return c;
}

// Index of a character whose series matches, or -1.
template <class Fn>
int find_character(const std::vector<Character>& chars, const std::vector<long>& want, Fn series) {
  for (std::size_t i = 0; i < chars.size(); ++i)
    if (ints(series(chars[i])) == want) return static_cast<int>(i);
  return -1;
}

// Span equality of two echelon bases of polynomials.
bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

class Octahedral : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    G = new MatrixGroup(lift("pgl2:octahedral"));
    chars = new std::vector<Character>(linear_characters(*G));
  }
  static void TearDownTestSuite() {
    delete G;
    delete chars;
  }
  static MatrixGroup* G;
  static std::vector<Character>* chars;
};
MatrixGroup* Octahedral::G = nullptr;
std::vector<Character>* Octahedral::chars = nullptr;

}  // namespace

TEST_F(Octahedral, MolienSeries) {
  ASSERT_EQ(chars->size(), 2u);
  EXPECT_EQ(ints(molien(*G, (*chars)[0], 20)), coeffs(20, {{0, 1}, {8, 1}, {12, 1}, {16, 1}, {18, 1}}));
  EXPECT_EQ(ints(molien(*G, (*chars)[1], 26)),
            coeffs(26, {{6, 1}, {12, 1}, {14, 1}, {18, 1}, {20, 1}, {22, 1}, {24, 1}}));
}

TEST_F(Octahedral, EquivariantMolien) {
  auto trivial = coeffs(21, {{1, 1}, {7, 1}, {9, 1}, {11, 1}, {13, 1}, {15, 1}, {17, 2}, {19, 2}});
  EXPECT_GE(find_character(*chars, trivial, [&](const Character& c) { return equivariant_molien(*G, c, 21); }), 0);
  EXPECT_EQ(ints(equivariant_molien(*G, (*chars)[0], 21)), trivial);
  auto rel = coeffs(20, {{5, 1}, {7, 1}, {11, 1}, {13, 2}, {15, 1}, {17, 1}, {19, 2}});
  EXPECT_EQ(ints(equivariant_molien(*G, (*chars)[1], 20)), rel);
}

TEST_F(Octahedral, InvariantOfDegreeEight) {
  const Character& triv = (*chars)[0];
  auto basis = invariant_space(*G, triv, 8);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0].to_string(), "x^8 + 14*x^4*y^4 + y^8");
  EXPECT_TRUE(invariant_space(*G, triv, 6).empty());
  EXPECT_TRUE(same_span(basis, invariant_space_by_sweep(*G, triv, 8)));
  EXPECT_TRUE(is_relative_invariant(*G, triv, basis[0], true));
}

TEST_F(Octahedral, EquivariantOfDegreeSeventeen) {
  auto f17 = parse_tuple("(x^17 - 60*x^13*y^4 + 110*x^9*y^8 + 212*x^5*y^12 - 7*x*y^16 : "
                         "-7*x^16*y + 212*x^12*y^5 + 110*x^8*y^9 - 60*x^4*y^13 + y^17)");
  const Character& triv = (*chars)[0];
  EXPECT_TRUE(is_equivariant(*G, triv, f17, true));
  auto space = equivariant_space(*G, triv, 17);
  EXPECT_EQ(space.size(), 2u);
  // f17 lies in the span: adding it does not raise the rank.
  auto keys = mono::of_degree(2, 17);
  DenseMat rows;
  auto push = [&](const MapTuple& f) {
    std::vector<CycNum> r;
    for (const auto& p : f)
      for (auto k : keys) r.push_back(embed(p.coeff(mono::exps(k)), triv.field));
    rows.push_back(r);
  };
  for (const auto& f : space) push(f);
  int before = rank(rows);
  push(f17);
  EXPECT_EQ(rank(rows), before);
}

TEST_F(Octahedral, SecondaryDegreesAndFundamentalCount) {
  EXPECT_EQ(secondary_degrees(*G, (*chars)[0], {8, 12}, true), (std::vector<int>{1, 7, 11, 17}));
  EXPECT_EQ(fundamental_equivariant_count(G->order(), {8, 12}, 2), 4);
}

TEST(Tetrahedral, MolienMatchesPrintedSeries) {
  auto G = lift("pgl2:tetrahedral");
  auto chars = linear_characters(G);
  ASSERT_EQ(chars.size(), 6u);
  auto inv = coeffs(20, {{0, 1}, {8, 1}, {12, 2}, {16, 1}});
  auto rel4 = coeffs(24, {{4, 1}, {8, 1}, {12, 1}, {16, 2}, {20, 2}});
  int n_inv = 0, n_rel4 = 0;
  for (const auto& c : chars) {
    if (ints(molien(G, c, 20)) == inv) ++n_inv;
    if (ints(molien(G, c, 24)) == rel4) ++n_rel4;
  }
  EXPECT_EQ(n_inv, 1);
  EXPECT_EQ(n_rel4, 2);
}

TEST(Tetrahedral, RelativeInvariantOfDegreeFour) {
  auto G = lift("pgl2:tetrahedral");
  auto chars = linear_characters(G);
  auto rel4 = coeffs(24, {{4, 1}, {8, 1}, {12, 1}, {16, 2}, {20, 2}});
  bool found = false;
  for (const auto& c : chars) {
    if (ints(molien(G, c, 24)) != rel4) continue;
    auto basis = invariant_space(G, c, 4);
    ASSERT_EQ(basis.size(), 1u);
    const CycField& F = basis[0].field();
    CycNum s3 = F.root_of_unity(3, 1) - F.root_of_unity(3, 2);  // sqrt(-3)
    MPoly x = MPoly::var(F, 2, 0), y = MPoly::var(F, 2, 1);
    MPoly plus = x.pow(4) + x.pow(2) * y.pow(2) * (s3 * Rational(2)) + y.pow(4);
    MPoly minus = x.pow(4) - x.pow(2) * y.pow(2) * (s3 * Rational(2)) + y.pow(4);
    if (basis[0] == plus) found = true;
    EXPECT_TRUE(basis[0] == plus || basis[0] == minus);
    EXPECT_TRUE(same_span(basis, invariant_space_by_sweep(G, c, 4)));
  }
  EXPECT_TRUE(found);
}

TEST(Group216, EquivariantSeriesAndDegreeFourMap) {
  auto G = lift("pgl3:G");
  auto chars = linear_characters(G);
  auto want = coeffs(32, {{4, 1}, {13, 4}, {16, 1}, {19, 2}, {22, 6}, {25, 4}, {28, 4}, {31, 12}});
  int idx = find_character(chars, want, [&](const Character& c) { return equivariant_molien(G, c, 32); });
  ASSERT_GE(idx, 0);
  const Character& chi = chars[static_cast<std::size_t>(idx)];
  auto space = equivariant_space(G, chi, 4);
  ASSERT_EQ(space.size(), 1u);
  auto f = parse_tuple("[x*y^3 - x*z^3, -x^3*y + y*z^3, x^3*z - y^3*z]");
  EXPECT_TRUE(is_equivariant(G, chi, f, true));
  EXPECT_EQ(space[0][0].to_string(), "x*y^3 - x*z^3");
}

TEST(GroupH, FormsSeries) {
  auto G = lift("pgl3:H");
  auto chars = linear_characters(G);
  ASSERT_EQ(chars.size(), 1u);
  auto forms = molien_forms(G, chars[0], 20);
  ASSERT_EQ(forms.size(), 4u);
  EXPECT_EQ(forms[0], molien(G, chars[0], 20));
  auto ratio = ints(series_div(forms[2], forms[0]));
  EXPECT_EQ(ratio, coeffs(20, {{1, 1}, {5, 1}, {6, 1}, {9, 1}, {10, 1}, {14, 1}, {16, -1}}));
  EXPECT_EQ(ints(series_div(forms[1], forms[0])), ratio);
  EXPECT_EQ(ints(series_div(forms[3], forms[0])), coeffs(20, {{0, 1}}));
  EXPECT_EQ(fundamental_equivariant_count(G.order(), {2, 6, 10}, 3), 6);
}

TEST(TrivialGroup, Basics) {
  CycField Q = cyclo_field(1);
  auto G = linear_closure({FMatrix::identity(Q, 2)});
  auto chi = linear_characters(G)[0];
  std::vector<long> want;
  for (long k = 0; k < 20; ++k) want.push_back(k + 1);
  EXPECT_EQ(ints(molien(G, chi)), want);
  auto forms = molien_forms(G, chi);
  EXPECT_EQ(ints(forms[1])[0], 2);
  EXPECT_EQ(secondary_degrees(G, chi, {1, 1}), std::vector<int>{0});
  EXPECT_EQ(fundamental_equivariant_count(1, {1, 1}, 2), 2);
  MPoly F = parse_poly("x^3 + 2*x*y^2");
  EXPECT_EQ(reynolds(G, chi, F), F);
  EXPECT_THROW(fundamental_equivariant_count(3, {1, 1}, 2), DomainError);
}

TEST(SecondaryDegrees, RejectsWrongPrimaries) {
  auto G = lift("pgl2:octahedral");
  auto chi = linear_characters(G)[0];
  EXPECT_THROW(secondary_degrees(G, chi, {6, 12}), DomainError);
}

TEST(SecondaryDegrees, DihedralProductIsPolynomial) {
  // Odd n: reflection group of order 2n with invariants xy and x^n + y^n.
  // Even n uses diag(zeta_n, 1), whose lift with the swap is the monomial group of order 2n^2.
  const std::tuple<long, int, int> cases[] = {{3, 2, 3}, {5, 2, 5}, {4, 4, 8}, {6, 6, 12}};
  for (auto [n, a, b] : cases) {
    auto G = lift("pgl2:dihedral:n=" + std::to_string(n));
    auto chi = linear_characters(G)[0];
    EXPECT_EQ(secondary_degrees(G, chi, {a, b}), std::vector<int>{0}) << n;
  }
}

TEST(Independence, Jacobian) {
  EXPECT_TRUE(algebraically_independent(std::vector<MPoly>{parse_poly("x"), parse_poly("y")}));
  MPoly F = parse_poly("x^8 + 14*x^4*y^4 + y^8");
  EXPECT_FALSE(algebraically_independent(std::vector<MPoly>{F, F * F}));
  MPoly R2 = parse_poly("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
  EXPECT_TRUE(algebraically_independent(std::vector<MPoly>{F, R2}));
  EXPECT_FALSE(algebraically_independent(std::vector<MPoly>{parse_poly("x"), parse_poly("y"), parse_poly("x*y")}));
}

TEST(InvariantProperties, MolienMatchesKernelDimensions) {
  for (std::string s : {"pgl2:octahedral", "pgl2:tetrahedral", "pgl2:dihedral:n=3", "pgl2:cyclic:n=4", "pgl3:E"}) {
    auto G = lift(s);
    for (const auto& chi : linear_characters(G)) {
      int top = G.n == 2 ? 12 : 6;
      auto H = ints(molien(G, chi, top + 1));
      auto P = ints(equivariant_molien(G, chi, top + 1));
      for (int d = 0; d <= top; ++d) {
        EXPECT_EQ(static_cast<long>(invariant_space(G, chi, d).size()), H[static_cast<std::size_t>(d)]) << s << " d=" << d;
        if (d <= 8)
          EXPECT_EQ(static_cast<long>(equivariant_space(G, chi, d).size()), P[static_cast<std::size_t>(d)]) << s << " d=" << d;
      }
    }
  }
}

TEST(InvariantProperties, SweepAgreesWithKernel) {
  for (std::string s : {"pgl2:octahedral", "pgl2:dihedral:n=4"}) {
    auto G = lift(s);
    for (const auto& chi : linear_characters(G))
      for (int d : {4, 5, 6, 7}) {
        EXPECT_TRUE(same_span(invariant_space(G, chi, d), invariant_space_by_sweep(G, chi, d))) << s << d;
        auto a = equivariant_space(G, chi, d), b = equivariant_space_by_sweep(G, chi, d);
        ASSERT_EQ(a.size(), b.size()) << s << d;
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]) << s << d;
      }
  }
}

TEST(InvariantProperties, ReynoldsProjects) {
  auto G = lift("pgl2:tetrahedral");
  for (const auto& chi : linear_characters(G))
    for (auto k : mono::of_degree(2, 6)) {
      MPoly m = MPoly::monomial(G.field.one(), 2, mono::exps(k));
      MPoly r = reynolds(G, chi, m);
      EXPECT_EQ(reynolds(G, chi, r), r);
      EXPECT_TRUE(r.is_zero() || (r.is_homogeneous() && r.total_degree() == 6));
      EXPECT_TRUE(is_relative_invariant(G, chi, r, true));
      MapTuple f{m, MPoly(G.field, 2)};
      MapTuple e = equivariant_reynolds(G, chi, f);
      EXPECT_TRUE(is_equivariant(G, chi, e, true));
      EXPECT_EQ(equivariant_reynolds(G, chi, e), e);
    }
}

TEST(InvariantProperties, InvariantTimesEquivariant) {
  auto G = lift("pgl2:octahedral");
  auto chars = linear_characters(G);
  MPoly p = invariant_space(G, chars[0], 8)[0];
  for (const auto& chi : chars)
    for (int d : {5, 7}) {
      for (auto f : equivariant_space(G, chi, d)) {
        for (auto& c : f) c = c * p.embed(c.field());
        EXPECT_TRUE(is_equivariant(G, chi, f, true));
      }
    }
}
