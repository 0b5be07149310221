#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "t21/gf.hpp"

namespace t21 {

// f(x) = c*x^outer_d + Tr_{q^l/q}(sum_i x^{d_i}).
struct MappingSpec {
  const Field* field = nullptr;
  Elem c = 1;
  std::uint32_t outer_d = 1;
  std::vector<std::uint32_t> trace_exponents;
};

// Validates c != 0 and exponents in [1, 2^n-2].
MappingSpec make_spec(const Field& f, Elem c, std::uint32_t outer_d,
                      std::vector<std::uint32_t> trace_exponents);

Elem evaluate(const MappingSpec& s, Elem x);

// Full value table of the spec, indexed by x.
std::vector<Elem> value_table(const MappingSpec& s);

// True iff every image value has exactly 0 or 2 preimages.
bool is_two_to_one_count(const MappingSpec& s);
bool is_two_to_one_table(const Field& f, const std::vector<Elem>& table);

// Lemma-style criterion: for every a, f(x+a)+f(a)=0 has exactly 2 solutions.
bool is_two_to_one_derivative(const MappingSpec& s);

struct ExpClass {
  std::uint32_t canonical;
  int size;
};

// Smallest member of {d*q^i mod (q^l-1)} and the class cardinality.
ExpClass cyclotomic_canonical(const Field& f, std::uint32_t d);

// True iff x -> Tr_{q^l/q}(x^d) is identically zero (class size s, l/s even).
bool trace_term_is_zero(const Field& f, std::uint32_t d);

// s = gcd(d1, q^l-1) and t with gcd(t, q^l-1)=1, d1*t = s mod q^l-1.
std::pair<std::uint32_t, std::uint32_t> divisor_reduce(const Field& f,
                                                       std::uint32_t d1);

// x -> f(x^e); requires gcd(e, 2^n-1) = 1.
std::function<Elem(Elem)> compose_with_monomial_perm(const MappingSpec& s,
                                                     std::uint32_t e);

std::string spec_to_json(const MappingSpec& s);
// Parses {k, l, modulus_bits, c, outer_d, trace_exponents}; the field is
// constructed into `storage` which must outlive the returned spec.
MappingSpec spec_from_json(const std::string& text,
                           std::deque<Field>& storage);

}  // namespace t21
