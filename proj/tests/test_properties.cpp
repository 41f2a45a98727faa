#include <gtest/gtest.h>

#include <random>

#include "equisym/autgroup.hpp"
#include "equisym/errors.hpp"
#include "equisym/invariants.hpp"
#include "equisym/text.hpp"

using namespace equisym;

namespace {

MatrixGroup lift(const std::string& spec) { return linear_closure(catalog(spec).lift); }

// f lies in the span of the basis.
bool in_span(const std::vector<MapTuple>& basis, const MapTuple& f, const CycField& F, int d) {
  auto keys = mono::of_degree(static_cast<int>(f.size()), d);
  DenseMat rows;
  auto push = [&](const MapTuple& g) {
    std::vector<CycNum> r;
    for (const auto& p : g)
      for (auto k : keys) r.push_back(embed(p.coeff(mono::exps(k)), F));
    rows.push_back(r);
  };
  for (const auto& b : basis) push(b);
  int before = rank(rows);
  push(f);
  return rank(rows) == before;
}

}  // namespace

// 200 random monomials split over six groups, each with a random linear character.
TEST(Properties, ReynoldsIdempotentAndInvariant) {
  const char* groups[] = {"pgl2:octahedral", "pgl2:tetrahedral", "pgl2:icosahedral",
                          "pgl2:dihedral:n=5", "pgl3:E", "pgl3:C5"};
  std::mt19937_64 rng(11);
  int checked = 0, nonzero = 0;
  for (int gi = 0; gi < 6; ++gi) {
    auto G = lift(groups[gi]);
    auto chars = linear_characters(G);
    int count = gi < 2 ? 34 : 33;
    for (int t = 0; t < count; ++t) {
      const Character& chi = chars[rng() % chars.size()];
      int d = static_cast<int>(rng() % 9);
      auto keys = mono::of_degree(G.n, d);
      MPoly m = MPoly::monomial(G.field.one(), G.n, mono::exps(keys[rng() % keys.size()]));
      MPoly r = reynolds(G, chi, m);
      EXPECT_EQ(reynolds(G, chi, r), r) << groups[gi];
      EXPECT_TRUE(is_relative_invariant(G, chi, r, true)) << groups[gi];
      nonzero += r.is_zero() ? 0 : 1;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
  EXPECT_GT(nonzero, 0);
}

TEST(Properties, MolienMatchesDimensionsUpToTen) {
  for (std::string s : {"pgl2:octahedral", "pgl2:tetrahedral", "pgl2:dihedral:n=5", "pgl3:E"}) {
    auto G = lift(s);
    for (const auto& chi : linear_characters(G)) {
      auto H = molien(G, chi, 11).integer_coeffs();
      auto P = equivariant_molien(G, chi, 11).integer_coeffs();
      for (int d = 0; d <= 10; ++d) {
        EXPECT_EQ(static_cast<long>(invariant_space(G, chi, d).size()), H[static_cast<std::size_t>(d)]) << s << " d=" << d;
        EXPECT_EQ(static_cast<long>(equivariant_space(G, chi, d).size()), P[static_cast<std::size_t>(d)]) << s << " d=" << d;
      }
    }
  }
}

TEST(Properties, JordanBlocksHaveInfiniteOrder) {
  CycField Q;
  for (int n : {2, 3}) {
    FMatrix J = FMatrix::identity(Q, n);
    for (int i = 0; i + 1 < n; ++i) J.at(i, i + 1) = Q.one();
    for (long k = 1; k <= 20; ++k) {
      FMatrix Jk = J.pow(k);
      EXPECT_EQ(Jk.at(0, 1).to_rational(), k);
      EXPECT_FALSE(Jk.is_scalar()) << n << " " << k;
    }
    EXPECT_THROW(projective_element_order(J, 20), ResourceCap);
    EXPECT_THROW(projective_closure({J}, 50), ResourceCap);
  }
}

// conj(conj(f, a), b) == conj(f, b a) over 50 random triples.
TEST(Properties, ConjugationIsAnAction) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = trial % 2 == 0 ? 2 : 3;
    CycField F = cyclo_field(trial % 5 == 0 ? 4 : 1);
    auto entry = [&] { return F.from_int(pick(rng)) + (F.degree() > 1 ? F.gen() * Rational(pick(rng)) : F.zero()); };
    auto random_matrix = [&] {
      for (;;) {
        std::vector<CycNum> e;
        for (int k = 0; k < n * n; ++k) e.push_back(entry());
        FMatrix A(F, n, e);
        if (!A.det().is_zero()) return A;
      }
    };
    int d = 2 + static_cast<int>(rng() % 2);
    std::vector<MPoly> coords;
    for (int i = 0; i < n; ++i) {
      MPoly p(F, n);
      for (auto k : mono::of_degree(n, d))
        if (rng() % 2) p = p + MPoly::monomial(entry(), n, mono::exps(k));
      p = p + MPoly::monomial(F.one(), n, mono::exps(mono::of_degree(n, d)[static_cast<std::size_t>(i)]));
      coords.push_back(p);
    }
    ProjMap f;
    try {
      f = make_map(coords);
    } catch (const DomainError&) {
      continue;
    }
    FMatrix a = random_matrix(), b = random_matrix();
    EXPECT_EQ(conjugate(conjugate(f, a), b), conjugate(f, b * a)) << f.to_string();
    EXPECT_EQ(conjugate(f, FMatrix::identity(F, n)), f);
  }
}

// Every group the library produces for a map respects 6 d^6 on P^2 and the P^1 bound.
TEST(Properties, BoundConformance) {
  for (const char* m : {"[x^2, y^2, z^2]", "[x^3, y^3, z^3]", "[x^3, x^2*y + y^3, z^3]", "[y^2, z^2, x^2]"}) {
    ProjMap f = parse_map(m);
    AutResult r = automorphism_group_p2(f);
    EXPECT_LE(static_cast<long>(r.elements.order()), aut_bound(f.degree, 2)) << m;
  }
  // Stabilizers inside catalog groups of P^1 maps built from their invariants.
  for (std::string s : {"pgl2:octahedral", "pgl2:icosahedral", "pgl2:tetrahedral", "pgl2:dihedral:n=5"}) {
    auto G = lift(s);
    auto P = projective_closure(catalog(s).generators);
    auto chars = linear_characters(G);
    for (int d = 2; d <= 13; ++d)
      for (const auto& chi : chars)
        for (const auto& e : equivariant_space(G, chi, d)) {
          ProjMap f;
          try {
            f = make_map(e);
          } catch (const DomainError&) {
            continue;
          }
          if (f.degree < 2 || !certify_morphism(f).is_morphism) continue;
          long fixed = 0;
          for (const auto& g : P.elements) fixed += is_automorphism(f, g) ? 1 : 0;
          EXPECT_LE(fixed, aut_bound(f.degree, 1)) << s << " " << f.to_string();
        }
  }
}

// Two diagonal representations of C5: one admits a degree-4 morphism, the other none.
TEST(InequivalentRepresentations, CyclicOfOrderFive) {
  auto G = lift("pgl3:C5");
  ProjMap target = parse_map("[z^4, y^4, x^4]");
  EXPECT_TRUE(certify_morphism(target).is_morphism);
  bool found = false;
  for (const auto& chi : linear_characters(G)) {
    auto space = equivariant_space(G, chi, 4);
    if (!space.empty() && in_span(space, target.coords, chi.field, 4)) found = true;
  }
  EXPECT_TRUE(found);
  for (const auto& g : catalog("pgl3:C5").generators) EXPECT_TRUE(is_automorphism(target, g));

  auto H = lift("pgl3:C5prime");
  std::size_t candidates = 0;
  for (const auto& chi : linear_characters(H)) {
    auto space = equivariant_space(H, chi, 4);
    for (const auto& e : space) {
      ++candidates;
      EXPECT_TRUE(resultant_of_forms(e).is_zero()) << text::tuple_to_string(e);
    }
    // A generic combination fails too: every character space vanishes on a common point.
    if (space.empty()) continue;
    MapTuple sum = space[0];
    for (std::size_t i = 1; i < space.size(); ++i)
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = sum[c] + space[i][c] * chi.field.from_int(static_cast<long>(2 * i + 1));
    EXPECT_TRUE(resultant_of_forms(sum).is_zero());
  }
  EXPECT_EQ(candidates, 45u);
}

