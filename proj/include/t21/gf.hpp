#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace t21 {

// Element of GF(2^n) in polynomial basis: bit i = coefficient of x^i.
using Elem = std::uint32_t;

// GF(2)[x] helpers on bitmask polynomials (bit i = coeff of x^i).
namespace gf2x {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t mod(std::uint64_t a, std::uint64_t b);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
// x^(2^e) mod `mod`, by repeated squaring.
std::uint64_t pow_x_2e(unsigned e, std::uint64_t mod);
bool is_irreducible(std::uint64_t poly);
// Lexicographically smallest irreducible of the given degree (bitmask read
// as an integer, smallest wins).
std::uint64_t smallest_irreducible(int degree);
}  // namespace gf2x

std::vector<std::uint64_t> prime_factors(std::uint64_t m);

// GF(2^n) with the subfield tower GF(2^k) < GF(2^{kl}).  Immutable after
// construction; all operations are pure and safe to share across threads.
class Field {
 public:
  static constexpr int kMaxN = 16;

  Field(int k, int l);                          // lex-smallest modulus
  Field(int k, int l, std::uint32_t modulus);   // explicit modulus

  int k() const { return k_; }
  int l() const { return l_; }
  int n() const { return n_; }
  std::uint32_t q() const { return 1u << k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }
  std::uint32_t order() const { return (1u << n_) - 1; }  // |GF(2^n)*|

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return alog2_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::int64_t e) const;
  Elem sqrt(Elem a) const;

  // Discrete log w.r.t. the stored generator; a must be nonzero.
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint32_t e) const { return alog2_[e % order()]; }
  Elem generator() const { return alog2_[1]; }

  Elem frobenius_q(Elem a, int i) const;     // a^(q^i), 0 <= i <= l
  Elem trace_rel(Elem a) const;              // Tr_{q^l/q}
  Elem trace_abs(Elem a) const;              // Tr_{2^n/2}, returns 0 or 1
  // Absolute trace of the subfield GF(q): Tr_{2^k/2}(a), a must satisfy a^q=a.
  Elem subfield_abs_trace(Elem a) const;
  bool in_subfield(Elem a) const { return frobenius_q(a, 1) == a; }
  // Solutions of w^2+w+1=0, i.e. the elements of multiplicative order 3.
  std::vector<Elem> omega_elements() const;

  std::uint64_t element_order(Elem a) const;

  std::string to_json() const;

 private:
  void build_tables();

  int k_, l_, n_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> alog2_;  // doubled antilog table, index < 2*order
};

}  // namespace t21
