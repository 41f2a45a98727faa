#include <gtest/gtest.h>

#include "equisym/errors.hpp"
#include "equisym/groups.hpp"

using namespace equisym;

namespace {

std::size_t proj_order(const std::string& spec) { return projective_closure(catalog(spec).generators).order(); }

}  // namespace

TEST(Closure, CyclicOrderThree) {
  CycField F = cyclo_field(3);
  FMatrix g = FMatrix::diag(F, {F.root_of_unity(3, 1), F.root_of_unity(3, -1)});
  EXPECT_EQ(projective_closure({g}).order(), 3u);
}

TEST(Catalog, Pgl2Orders) {
  for (long n : {1, 2, 3, 4, 5, 6, 8}) {
    EXPECT_EQ(proj_order("pgl2:cyclic:n=" + std::to_string(n)), static_cast<std::size_t>(n)) << n;
    if (n >= 2) EXPECT_EQ(proj_order("pgl2:dihedral:n=" + std::to_string(n)), static_cast<std::size_t>(2 * n)) << n;
  }
  EXPECT_EQ(proj_order("pgl2:Tetrahedral"), 12u);
  EXPECT_EQ(proj_order("pgl2:octahedral"), 24u);
  EXPECT_EQ(proj_order("pgl2:icosahedral"), 60u);
}

TEST(Catalog, LiftsCoverPrintedGroups) {
  for (std::string s : {"pgl2:tetrahedral", "pgl2:octahedral", "pgl2:icosahedral", "pgl3:H", "pgl3:J"}) {
    CatalogEntry E = catalog(s);
    ProjGroup P = projective_closure(E.generators);
    ProjGroup L = projective_closure(E.lift);
    ASSERT_EQ(P.order(), L.order()) << s;
    for (const auto& g : L.elements) EXPECT_GE(P.index_of(g), 0) << s;
  }
}

TEST(Catalog, Pgl3ExceptionalOrders) {
  const std::pair<const char*, std::size_t> want[] = {{"E", 36}, {"F", 72}, {"G", 216}, {"H", 60}, {"I", 360}, {"J", 168}};
  for (auto [label, n] : want) EXPECT_EQ(proj_order(std::string("pgl3:") + label), n) << label;
}

TEST(Catalog, Pgl3Families) {
  EXPECT_EQ(proj_order("pgl3:A:n=6,a=1,b=2"), 6u);
  // diagonal part is the cube of (Z/4) modulo scalars
  EXPECT_EQ(proj_order("pgl3:C:n=4,a=1,b=2"), 48u);
  EXPECT_EQ(proj_order("pgl3:B1:p=3,q=4"), 96u);
  // The 2x2 block acts through the binary group, so -1 in the block is not scalar.
  EXPECT_EQ(proj_order("pgl3:B2:p=1"), 24u);
  EXPECT_EQ(proj_order("pgl3:B3:p=1"), 48u);
  EXPECT_EQ(proj_order("pgl3:B4:p=1"), 120u);
  EXPECT_EQ(proj_order("pgl3:B3:p=3"), 144u);
  EXPECT_EQ(proj_order("pgl3:C5"), 5u);
  EXPECT_EQ(proj_order("pgl3:C5prime"), 5u);
}

TEST(Catalog, RejectsBadInput) {
  EXPECT_THROW(catalog("pgl2:dihedral:n=1"), DomainError);
  EXPECT_THROW(catalog("pgl3:Z"), DomainError);
  EXPECT_THROW(catalog("pgl3:A:n=4,a=2,b=2"), DomainError);
  EXPECT_THROW(catalog("pgl2:cyclic"), DomainError);
}

TEST(Closure, Idempotent) {
  for (std::string s : {"pgl2:octahedral", "pgl3:E", "pgl3:H"}) {
    ProjGroup G = projective_closure(catalog(s).generators);
    ProjGroup H = projective_closure(G.elements);
    ASSERT_EQ(G.order(), H.order());
    for (const auto& g : H.elements) EXPECT_GE(G.index_of(g), 0);
  }
}

TEST(Closure, CapSignalsInfiniteGroup) {
  CycField Q = cyclo_field(1);
  FMatrix J(Q, 2, {Q.one(), Q.one(), Q.zero(), Q.one()});
  EXPECT_THROW(projective_closure({J}, 200), ResourceCap);
}

TEST(Characters, Counts) {
  CycField Q = cyclo_field(1);
  EXPECT_EQ(linear_characters(linear_closure({FMatrix::identity(Q, 2)})).size(), 1u);
  CycField F = cyclo_field(7);
  auto cyc = linear_closure({FMatrix::diag(F, {F.root_of_unity(7, 1), F.one()})});
  EXPECT_EQ(linear_characters(cyc).size(), 7u);
  auto oct = linear_closure(catalog("pgl2:octahedral").lift);
  EXPECT_EQ(oct.order(), 48u);
  EXPECT_EQ(linear_characters(oct).size(), 2u);
  auto tet = linear_closure(catalog("pgl2:tetrahedral").lift);
  EXPECT_EQ(tet.order(), 48u);
  EXPECT_EQ(linear_characters(tet).size(), 6u);
  auto ico = linear_closure(catalog("pgl2:icosahedral").lift);
  EXPECT_EQ(ico.order(), 120u);
  EXPECT_EQ(linear_characters(ico).size(), 1u);
}

TEST(Characters, Homomorphism) {
  for (std::string s : {"pgl2:octahedral", "pgl2:dihedral:n=4", "pgl3:E", "pgl3:G", "pgl3:H"}) {
    auto G = linear_closure(catalog(s).lift);
    auto chars = linear_characters(G);
    ASSERT_FALSE(chars.empty());
    EXPECT_TRUE(chars[0].is_trivial());
    for (const auto& c : chars) {
      EXPECT_TRUE(c.values[0].is_one());
      for (std::size_t a = 0; a < G.order(); ++a)
        for (std::size_t b = 0; b < G.order(); b += (G.order() > 100 ? 7 : 1)) {
          long ab = G.index_of(G.elements[a] * G.elements[b]);
          ASSERT_GE(ab, 0);
          ASSERT_EQ(c.values[static_cast<std::size_t>(ab)], c.values[a] * c.values[b]) << s;
        }
    }
  }
}

TEST(Cyclic, LargestCyclicSubgroup) {
  auto H = largest_cyclic(projective_closure(catalog("pgl3:H").generators));
  EXPECT_EQ(H.n, 5);
  EXPECT_EQ(H.m, 12);
  auto J = largest_cyclic(projective_closure(catalog("pgl3:J").generators));
  EXPECT_EQ(J.n, 7);
  EXPECT_EQ(J.m, 24);
  auto C = largest_cyclic(projective_closure(catalog("pgl2:cyclic:n=9").generators));
  EXPECT_EQ(C.n, 9);
  EXPECT_EQ(C.m, 1);
}

TEST(Cyclic, IndexBoundOverCatalog) {
  const std::pair<const char*, long> bounds[] = {
      {"pgl3:A:n=5,a=1,b=2", 1}, {"pgl3:B1:p=2,q=3", 0}, {"pgl3:B2:p=1", 12}, {"pgl3:B3:p=1", 24},
      {"pgl3:B4:p=2", 60},       {"pgl3:C:n=3,a=1,b=2", 0}, {"pgl3:D:n=2,a=1,b=0", 0}, {"pgl3:E", 9},
      {"pgl3:F", 18},            {"pgl3:G", 36},          {"pgl3:H", 12},            {"pgl3:I", 72},
      {"pgl3:J", 24}};
  for (auto [s, bound] : bounds) {
    auto G = projective_closure(catalog(s).generators);
    auto c = largest_cyclic(G);
    EXPECT_EQ(static_cast<std::size_t>(c.n * c.m), G.order()) << s;
    if (bound > 0) EXPECT_LE(c.m, bound) << s;
    if (std::string(s) == "pgl3:I") {
      // A6 has no element of order above 5, so the uniform bound fails here.
      EXPECT_EQ(c.n, 5);
      EXPECT_GT(c.m, 6 * c.n);
    } else {
      EXPECT_LE(c.m, 6 * c.n) << s;
    }
  }
}
