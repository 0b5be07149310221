#include "t21/mapping.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace t21 {

MappingSpec make_spec(const Field& f, Elem c, std::uint32_t outer_d,
                      std::vector<std::uint32_t> trace_exponents) {
  if (c == 0) throw std::invalid_argument("c must be nonzero");
  if (outer_d < 1 || outer_d > f.order() - 1)
    throw std::invalid_argument("outer exponent out of range");
  for (auto d : trace_exponents)
    if (d < 1 || d > f.order() - 1)
      throw std::invalid_argument("trace exponent out of range");
  return {&f, c, outer_d, std::move(trace_exponents)};
}

Elem evaluate(const MappingSpec& s, Elem x) {
  const Field& f = *s.field;
  Elem inner = 0;
  for (auto d : s.trace_exponents)
    inner ^= f.pow(x, static_cast<std::int64_t>(d));
  return f.mul(s.c, f.pow(x, static_cast<std::int64_t>(s.outer_d))) ^
         f.trace_rel(inner);
}

std::vector<Elem> value_table(const MappingSpec& s) {
  std::vector<Elem> t(s.field->size());
  for (Elem x = 0; x < s.field->size(); ++x) t[x] = evaluate(s, x);
  return t;
}

bool is_two_to_one_table(const Field& f, const std::vector<Elem>& table) {
  std::vector<std::uint8_t> count(f.size(), 0);
  std::uint32_t pairs = 0;
  for (Elem v : table) {
    if (++count[v] == 3) return false;
    if (count[v] == 2) ++pairs;
  }
  return pairs * 2 == f.size();
}

bool is_two_to_one_count(const MappingSpec& s) {
  return is_two_to_one_table(*s.field, value_table(s));
}

bool is_two_to_one_derivative(const MappingSpec& s) {
  const Field& f = *s.field;
  for (Elem a = 0; a < f.size(); ++a) {
    const Elem fa = evaluate(s, a);
    int sols = 0;
    for (Elem x = 0; x < f.size(); ++x) {
      if ((evaluate(s, f.add(x, a)) ^ fa) == 0) {
        if (++sols > 2) break;
      }
    }
    if (sols != 2) return false;
  }
  return true;
}

ExpClass cyclotomic_canonical(const Field& f, std::uint32_t d) {
  const std::uint64_t N = f.order();
  if (d < 1 || d > N - 1) throw std::invalid_argument("exponent out of range");
  std::uint64_t cur = d, mn = d;
  int size = 0;
  do {
    mn = std::min(mn, cur);
    cur = (cur * f.q()) % N;
    ++size;
  } while (cur != d);
  return {static_cast<std::uint32_t>(mn), size};
}

bool trace_term_is_zero(const Field& f, std::uint32_t d) {
  const int s = cyclotomic_canonical(f, d).size;
  return (f.l() / s) % 2 == 0;
}

std::pair<std::uint32_t, std::uint32_t> divisor_reduce(const Field& f,
                                                       std::uint32_t d1) {
  const std::uint64_t N = f.order();
  if (d1 < 1 || d1 > N - 1) throw std::invalid_argument("exponent out of range");
  const std::uint64_t s = std::gcd<std::uint64_t>(d1, N);
  const std::uint64_t m = N / s, dp = d1 / s;
  // t0 = dp^{-1} mod m, then lift to a residue coprime to N.
  std::uint64_t t0 = 1 % m;
  for (std::uint64_t t = 1; t < m; ++t)
    if ((dp * t) % m == 1) {
      t0 = t;
      break;
    }
  for (std::uint64_t t = t0;; t += m) {
    if (t >= 1 && std::gcd(t, N) == 1)
      return {static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t % N)};
    if (t > N + m) break;
  }
  throw std::logic_error("no coprime lift found");
}

std::function<Elem(Elem)> compose_with_monomial_perm(const MappingSpec& s,
                                                     std::uint32_t e) {
  if (std::gcd<std::uint64_t>(e, s.field->order()) != 1)
    throw std::invalid_argument("exponent not coprime to 2^n-1");
  return [spec = s, e](Elem x) {
    return evaluate(spec, spec.field->pow(x, static_cast<std::int64_t>(e)));
  };
}

std::string spec_to_json(const MappingSpec& s) {
  nlohmann::ordered_json j;
  j["k"] = s.field->k();
  j["l"] = s.field->l();
  j["modulus_bits"] = s.field->modulus();
  j["c"] = s.c;
  j["outer_d"] = s.outer_d;
  j["trace_exponents"] = s.trace_exponents;
  return j.dump();
}

MappingSpec spec_from_json(const std::string& text,
                           std::deque<Field>& storage) {
  const auto j = nlohmann::json::parse(text);
  storage.emplace_back(j.at("k").get<int>(), j.at("l").get<int>(),
                       j.at("modulus_bits").get<std::uint32_t>());
  return make_spec(storage.back(), j.at("c").get<Elem>(),
                   j.at("outer_d").get<std::uint32_t>(),
                   j.at("trace_exponents").get<std::vector<std::uint32_t>>());
}

}  // namespace t21
