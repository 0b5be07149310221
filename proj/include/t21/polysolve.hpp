#pragma once

#include <array>
#include <span>
#include <vector>

#include "t21/gf.hpp"

namespace t21 {

// Multiset of irreducible-factor degrees, sorted ascending.
using FactorPattern = std::vector<int>;

std::string pattern_to_string(const FactorPattern& p);

// Roots of x^2 + u x + v over GF(2^n).  When u != 0 there are 2 roots iff
// Tr(v/u^2) = 0, else none; when u = 0 the single root is sqrt(v).
std::vector<Elem> quadratic_roots(const Field& f, Elem u, Elem v);

// Solve y^2 + y = c; empty if Tr(c) = 1.
std::vector<Elem> artin_schreier_roots(const Field& f, Elem c);

// Factorization pattern of x^3 + a x + b, a, b nonzero.
FactorPattern cubic_classify(const Field& f, Elem a, Elem b);

// One root of x^3 + a x + b (b != 0), built as eps + a/eps from a resolvent
// root; throws if the cubic has no root in the field.
Elem cubic_root(const Field& f, Elem a, Elem b);

// The three roots of x^3 + (1+t)x + t + t^2 over GF(q^2), l = 2, k odd,
// t in GF(q)\GF(2).
std::array<Elem, 3> special_cubic_roots(const Field& f, Elem t);

// Factorization pattern of x^4 + a2 x^2 + a1 x + a0, a0*a1 != 0.
FactorPattern quartic_classify(const Field& f, Elem a2, Elem a1, Elem a0);

// Oracle: pattern by exhaustive root search plus irreducibility testing.
// coeffs = c0..c_{d-1} of a monic polynomial of degree d = coeffs.size(),
// 1 <= d <= 4.
FactorPattern brute_factor(const Field& f, std::span<const Elem> coeffs);

// Dickson polynomial of the first kind, coefficients reduced mod 2.
Elem dickson_eval(const Field& f, unsigned r, Elem x, Elem a);

// gcd(r, (2^n)^2 - 1) == 1.
bool dickson_is_permutation(const Field& f, unsigned r);

}  // namespace t21
