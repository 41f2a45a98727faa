#pragma once

// Text forms: polynomials in x, y, z with rational coefficients and z<m> literals for zeta_m.

#include <string>
#include <vector>

#include "equisym/cyclotomic.hpp"
#include "equisym/matrix.hpp"
#include "equisym/mpoly.hpp"

namespace equisym::text {

// lcm of the hint and every zeta_k literal index in the text.
unsigned infer_conductor(const std::string& s, unsigned hint = 1);

MPoly parse_poly(const std::string& s, const CycField& F, int nvars);

// "[f0, f1, f2]" or "(f0 : f1 : f2)"; the variable count is the coordinate count.
std::vector<MPoly> parse_tuple(const std::string& s, const CycField& F);

// "[[a, b], [c, d]]" with entries in the same expression language (constants only).
FMatrix parse_matrix(const std::string& s, const CycField& F);

// Standalone field element in the symbol z ("1/2*z^3 - 2").
CycNum parse_cyc(const std::string& s, const CycField& F);

std::string tuple_to_string(const std::vector<MPoly>& f);

}  // namespace equisym::text
