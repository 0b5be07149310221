#include "t21/gf.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace t21 {

namespace gf2x {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  const int deg = 63 - std::countl_zero(mod);
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> deg) & 1) a ^= mod;
  }
  return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t b) {
  const int db = 63 - std::countl_zero(b);
  while (a >= (std::uint64_t{1} << db)) {
    const int da = 63 - std::countl_zero(a);
    a ^= b << (da - db);
  }
  return a;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    const std::uint64_t r = mod(a, b);
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t pow_x_2e(unsigned e, std::uint64_t m) {
  std::uint64_t r = 2;  // x
  for (unsigned i = 0; i < e; ++i) r = mulmod(r, r, m);
  return r;
}

bool is_irreducible(std::uint64_t poly) {
  const int n = 63 - std::countl_zero(poly);
  if (n < 1) return false;
  if ((poly & 1) == 0) return n == 1 && poly == 2;  // divisible by x
  // x^(2^n) == x mod poly, and gcd(x^(2^(n/p)) + x, poly) = 1 for prime p | n.
  if (pow_x_2e(static_cast<unsigned>(n), poly) != 2) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(n))) {
    const std::uint64_t h = pow_x_2e(static_cast<unsigned>(n / p), poly) ^ 2u;
    if (gcd(h, poly) != 1) return false;
  }
  return true;
}

std::uint64_t smallest_irreducible(int degree) {
  for (std::uint64_t p = std::uint64_t{1} << degree;
       p < std::uint64_t{1} << (degree + 1); ++p) {
    if (is_irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace gf2x

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

Field::Field(int k, int l)
    : Field(k, l,
            static_cast<std::uint32_t>(gf2x::smallest_irreducible(k * l))) {}

Field::Field(int k, int l, std::uint32_t modulus)
    : k_(k), l_(l), n_(k * l), modulus_(modulus) {
  if (k < 1 || l < 1) throw std::invalid_argument("k and l must be positive");
  if (n_ > kMaxN) throw std::length_error("field degree exceeds capacity");
  if ((modulus_ >> n_) != 1u)
    throw std::invalid_argument("modulus degree does not match k*l");
  if (!gf2x::is_irreducible(modulus_))
    throw std::invalid_argument("modulus is not irreducible over GF(2)");
  build_tables();
}

void Field::build_tables() {
  const std::uint32_t N = order();
  // Find a generator of GF(2^n)*.
  const auto ps = prime_factors(N);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = static_cast<Elem>(gf2x::mulmod(r, a, modulus_));
      a = static_cast<Elem>(gf2x::mulmod(a, a, modulus_));
      e >>= 1;
    }
    return r;
  };
  Elem g = 0;
  for (Elem cand = 2; cand < size(); ++cand) {
    bool ok = true;
    for (std::uint64_t p : ps)
      if (slow_pow(cand, N / p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0 && N == 1) g = 1;  // GF(2)
  log_.assign(size(), 0);
  alog2_.assign(2 * N, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < N; ++i) {
    alog2_[i] = cur;
    alog2_[i + N] = cur;
    log_[cur] = i;
    cur = static_cast<Elem>(gf2x::mulmod(cur, g, modulus_));
  }
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return alog2_[order() - log_[a]];
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint32_t N = order();
  std::int64_t r = e % static_cast<std::int64_t>(N);
  if (r < 0) r += N;
  const std::uint64_t idx =
      (static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r)) % N;
  return alog2_[idx];
}

Elem Field::sqrt(Elem a) const { return pow(a, 1 << (n_ - 1)); }

Elem Field::frobenius_q(Elem a, int i) const {
  if (i < 0 || i > l_) throw std::invalid_argument("frobenius index");
  if (a == 0) return 0;
  std::uint64_t e = log_[a];
  const std::uint32_t N = order();
  for (int j = 0; j < k_ * i; ++j) e = (2 * e) % N;
  return alog2_[e];
}

Elem Field::trace_rel(Elem a) const {
  Elem s = 0, cur = a;
  for (int i = 0; i < l_; ++i) {
    s ^= cur;
    cur = frobenius_q(cur, 1);
  }
  return s;
}

Elem Field::trace_abs(Elem a) const {
  Elem s = 0, cur = a;
  for (int i = 0; i < n_; ++i) {
    s ^= cur;
    cur = mul(cur, cur);
  }
  return s;
}

Elem Field::subfield_abs_trace(Elem a) const {
  if (!in_subfield(a)) throw std::invalid_argument("element not in GF(q)");
  Elem s = 0, cur = a;
  for (int i = 0; i < k_; ++i) {
    s ^= cur;
    cur = mul(cur, cur);
  }
  return s;
}

std::vector<Elem> Field::omega_elements() const {
  std::vector<Elem> out;
  if (order() % 3 != 0) return out;
  for (Elem w = 2; w < size(); ++w)
    if (mul(w, w) == (w ^ 1u)) out.push_back(w);  // w^2 = w + 1
  return out;
}

std::uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw std::domain_error("order of zero");
  std::uint64_t ord = order();
  for (std::uint64_t p : prime_factors(order()))
    while (ord % p == 0 && pow(a, static_cast<std::int64_t>(ord / p)) == 1)
      ord /= p;
  return ord;
}

std::string Field::to_json() const {
  std::ostringstream os;
  os << "{\"k\":" << k_ << ",\"l\":" << l_ << ",\"modulus_bits\":" << modulus_
     << "}";
  return os.str();
}

}  // namespace t21
