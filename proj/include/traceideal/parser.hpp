#pragma once

#include <string>
#include <vector>

#include "traceideal/polynomial.hpp"

namespace traceideal {

// Polynomial text syntax: terms joined by '+'/'-'; a term is
// [coeff][*][var[^exp]]... with 'i' the imaginary unit literal; whitespace
// insignificant.  Examples: "z^2+x^3+y^3", "-i*y^2", "3/2*x*y".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// "(p1, p2, ...)"; "(0)" is the zero ideal, "()" is rejected.
std::vector<Polynomial> parse_generators(const RingPtr& ring, const std::string& text);

// "[[a,b];[c,d]]": rows separated by ';', entries by ','.
std::vector<std::vector<Polynomial>> parse_matrix(const RingPtr& ring, const std::string& text);

// "x,y,z;QQi;z^2+x^3" -> quotient ring (third field empty -> free ring,
// comma-separated defining generators allowed).
RingPtr parse_ring(const std::string& spec, MonomialOrder order = MonomialOrder::grevlex());

}  // namespace traceideal
