#pragma once

// Molien series, Reynolds projectors and bases of relative invariants and
// equivariant maps for a finite linear group with a linear character.
//
// Action on polynomials: (gF)(v) = F(g^-1 v). F is chi-invariant when
// gF = chi(g) F, and a tuple f is chi-equivariant when f(g v) = chi(g) g f(v).

#include <functional>
#include <vector>

#include "equisym/groups.hpp"
#include "equisym/mpoly.hpp"
#include "equisym/series.hpp"

namespace equisym {

using MapTuple = std::vector<MPoly>;

// 1/|G| sum chi(g) / det(1 - t g); coefficient k is the dimension of degree-k chi-invariants.
TruncSeries molien(const MatrixGroup& G, const Character& chi, int precision = TruncSeries::kDefaultPrecision);

// Entry p is the s^p coefficient of 1/|G| sum chi(g) det(1 + s g) / det(1 - t g), p = 0..n.
std::vector<TruncSeries> molien_forms(const MatrixGroup& G, const Character& chi,
                                      int precision = TruncSeries::kDefaultPrecision);

// 1/|G| sum chi(g)^-1 tr(g^-1) / det(1 - t g); coefficient k is the dimension of
// degree-k chi-equivariant maps.
TruncSeries equivariant_molien(const MatrixGroup& G, const Character& chi,
                               int precision = TruncSeries::kDefaultPrecision);

// 1/|G| sum chi(g) F(g x). The result lies in chi.field.
MPoly reynolds(const MatrixGroup& G, const Character& chi, const MPoly& F);
// 1/|G| sum chi(g)^-1 g^-1 f(g x).
MapTuple equivariant_reynolds(const MatrixGroup& G, const Character& chi, const MapTuple& f);

// Checks on the generators, or on every element when all_elements is set.
bool is_relative_invariant(const MatrixGroup& G, const Character& chi, const MPoly& F, bool all_elements = false);
bool is_equivariant(const MatrixGroup& G, const Character& chi, const MapTuple& f, bool all_elements = false);

// Reduced echelon basis (leading coefficient 1, leading terms strictly decreasing)
// of degree-d chi-invariants, from the kernel of g - chi(g) over the generators.
std::vector<MPoly> invariant_space(const MatrixGroup& G, const Character& chi, int d);
// Same space spanned by Reynolds images of all degree-d monomials.
std::vector<MPoly> invariant_space_by_sweep(const MatrixGroup& G, const Character& chi, int d);

std::vector<MapTuple> equivariant_space(const MatrixGroup& G, const Character& chi, int d);
std::vector<MapTuple> equivariant_space_by_sweep(const MatrixGroup& G, const Character& chi, int d);

// Exponents e_i with sum t^{e_i} = H(t) prod (1 - t^{d_i}). series(p) computes H to
// precision p; tries the given precision, then 40. Throws DomainError("NotPolynomial").
std::vector<int> secondary_degrees(const std::function<TruncSeries(int)>& series, const std::vector<int>& primaries,
                                   int precision = TruncSeries::kDefaultPrecision);
std::vector<int> secondary_degrees(const MatrixGroup& G, const Character& chi, const std::vector<int>& primaries,
                                   bool equivariant = false);

// m d_1 ... d_N / |G|; throws DomainError("NotInteger").
long fundamental_equivariant_count(std::size_t group_order, const std::vector<int>& primaries, int w_dim);

// Jacobian of polys has rank polys.size(), tested on symbolic maximal minors.
bool algebraically_independent(const std::vector<MPoly>& polys);

}  // namespace equisym
