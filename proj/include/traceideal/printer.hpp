#pragma once

#include <string>
#include <vector>

#include "traceideal/polynomial.hpp"

namespace traceideal {

// Canonical text form, e.g. "x^3+y^3+z^2", "-i*y^2", "3/2*x*y", "0".
// Terms appear in the polynomial's stored (ring order, descending) sequence;
// Gaussian coefficients are split into rational and i-multiple addends so the
// output stays inside the documented syntax.
std::string print_polynomial(const Polynomial& p);

// "(g1, g2, ...)" with the generators sorted descending under plain lex,
// "(0)" and "(1)" for the zero and unit ideals.
std::string print_generators(const std::vector<Polynomial>& gens);

std::string print_matrix(const std::vector<std::vector<Polynomial>>& m);

}  // namespace traceideal
