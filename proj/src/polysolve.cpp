#include "t21/polysolve.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace t21 {

namespace {

// GF(2^{2n}) together with the embedding of the base field.
struct QuadExt {
  Field ext;
  std::vector<Elem> embed;              // base elem -> ext elem
  std::vector<std::int32_t> back;       // ext elem -> base elem, -1 if none

  explicit QuadExt(const Field& base) : ext(2 * base.n(), 1) {
    // Root of the base modulus inside the extension.
    Elem beta = 0;
    bool found = false;
    for (Elem e = 0; e < ext.size(); ++e) {
      Elem acc = 0;
      for (int i = base.n(); i >= 0; --i) {
        acc = ext.mul(acc, e);
        if ((base.modulus() >> i) & 1) acc ^= 1;
      }
      if (acc == 0) {
        beta = e;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("no root of base modulus in extension");
    std::vector<Elem> bp(base.n());
    bp[0] = 1;
    for (int i = 1; i < base.n(); ++i) bp[i] = ext.mul(bp[i - 1], beta);
    embed.resize(base.size());
    back.assign(ext.size(), -1);
    for (Elem a = 0; a < base.size(); ++a) {
      Elem img = 0;
      for (int i = 0; i < base.n(); ++i)
        if ((a >> i) & 1) img ^= bp[i];
      embed[a] = img;
      back[img] = static_cast<std::int32_t>(a);
    }
  }
};

bool is_cube(const Field& f, Elem e) {
  if (e == 0) return true;
  if (f.order() % 3 != 0) return true;
  return f.pow(e, f.order() / 3) == 1;
}

// All cube roots of e (0, 1 or 3 of them).
std::vector<Elem> cube_roots(const Field& f, Elem e) {
  if (e == 0) return {0};
  const std::uint32_t N = f.order();
  if (N % 3 != 0) {
    // 3 invertible mod N: unique cube root.
    std::uint64_t inv3 = 0;
    for (std::uint64_t t = 1; t < 3 * static_cast<std::uint64_t>(N); ++t)
      if ((3 * t) % N == 1 % N) {
        inv3 = t;
        break;
      }
    return {f.pow(e, static_cast<std::int64_t>(inv3))};
  }
  const std::uint32_t le = f.log(e);
  if (le % 3 != 0) return {};
  std::vector<Elem> out;
  for (std::uint32_t j = 0; j < 3; ++j)
    out.push_back(f.exp(le / 3 + j * (N / 3)));
  return out;
}

Elem eval_cubic(const Field& f, Elem a, Elem b, Elem x) {
  return f.add(f.add(f.pow(x, 3), f.mul(a, x)), b);
}

}  // namespace

std::string pattern_to_string(const FactorPattern& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

std::vector<Elem> artin_schreier_roots(const Field& f, Elem c) {
  if (f.trace_abs(c) != 0) return {};
  const int n = f.n();
  // Solve the GF(2)-linear system (y^2 + y) = c by Gaussian elimination.
  std::vector<std::uint64_t> rows(n);  // columns of the map, augmented
  for (int j = 0; j < n; ++j) {
    const Elem e = Elem{1} << j;
    const Elem img = f.add(f.mul(e, e), e);
    for (int i = 0; i < n; ++i)
      if ((img >> i) & 1) rows[i] |= std::uint64_t{1} << j;
  }
  for (int i = 0; i < n; ++i)
    if ((c >> i) & 1) rows[i] |= std::uint64_t{1} << n;
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int r = rank; r < n; ++r)
      if ((rows[r] >> col) & 1) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[rank], rows[sel]);
    for (int r = 0; r < n; ++r)
      if (r != rank && ((rows[r] >> col) & 1)) rows[r] ^= rows[rank];
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < n; ++r)
    if ((rows[r] >> n) & 1) return {};  // inconsistent (should not happen)
  Elem y = 0;
  for (int r = 0; r < rank; ++r)
    if ((rows[r] >> n) & 1) y |= Elem{1} << pivot_col[r];
  return {y, f.add(y, 1)};
}

std::vector<Elem> quadratic_roots(const Field& f, Elem u, Elem v) {
  if (u == 0) return {f.sqrt(v)};
  const Elem c = f.mul(v, f.inv(f.mul(u, u)));
  auto ys = artin_schreier_roots(f, c);
  std::vector<Elem> out;
  out.reserve(ys.size());
  for (Elem y : ys) out.push_back(f.mul(u, y));
  std::sort(out.begin(), out.end());
  return out;
}

FactorPattern cubic_classify(const Field& f, Elem a, Elem b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("cubic_classify requires a,b nonzero");
  const Elem ratio = f.mul(f.pow(a, 3), f.inv(f.mul(b, b)));
  const Elem tr1 = f.trace_abs(1);
  if (f.trace_abs(ratio) != tr1) return {1, 2};
  // Split (1,1,1) from (3) by the cube test on a resolvent root of
  // y^2 + b y + a^3, taken in GF(2^n) for even n and GF(2^{2n}) for odd n.
  bool cube;
  if (f.n() % 2 == 0) {
    auto ys = quadratic_roots(f, b, f.pow(a, 3));
    if (ys.empty() || ys[0] == 0)
      throw std::logic_error("resolvent inconsistent with trace condition");
    cube = is_cube(f, ys[0]);
  } else {
    if (2 * f.n() > Field::kMaxN)
      throw std::length_error("cubic_classify extension exceeds capacity");
    QuadExt qe(f);
    auto ys = quadratic_roots(qe.ext, qe.embed[b], qe.ext.pow(qe.embed[a], 3));
    if (ys.empty() || ys[0] == 0)
      throw std::logic_error("resolvent has no roots in the extension");
    cube = is_cube(qe.ext, ys[0]);
  }
  return cube ? FactorPattern{1, 1, 1} : FactorPattern{3};
}

Elem cubic_root(const Field& f, Elem a, Elem b) {
  if (b == 0) throw std::invalid_argument("cubic_root requires b nonzero");
  if (a == 0) {
    auto rs = cube_roots(f, b);
    if (rs.empty()) throw std::runtime_error("cubic has no root in the field");
    return rs[0];
  }
  // Resolvent roots in the base field, falling back to GF(2^{2n}).
  auto ys = quadratic_roots(f, b, f.pow(a, 3));
  if (!ys.empty()) {
    for (Elem y1 : ys) {
      if (y1 == 0) continue;
      for (Elem eps : cube_roots(f, y1)) {
        if (eps == 0) continue;
        const Elem r = f.add(eps, f.mul(a, f.inv(eps)));
        if (eval_cubic(f, a, b, r) == 0) return r;
      }
    }
  } else {
    if (2 * f.n() > Field::kMaxN)
      throw std::length_error("cubic_root extension exceeds capacity");
    QuadExt qe(f);
    const Elem A = qe.embed[a], B = qe.embed[b];
    auto eys = quadratic_roots(qe.ext, B, qe.ext.pow(A, 3));
    for (Elem y1 : eys) {
      if (y1 == 0) continue;
      for (Elem eps : cube_roots(qe.ext, y1)) {
        if (eps == 0) continue;
        const Elem r = qe.ext.add(eps, qe.ext.mul(A, qe.ext.inv(eps)));
        if (qe.back[r] < 0) continue;
        const Elem rb = static_cast<Elem>(qe.back[r]);
        if (eval_cubic(f, a, b, rb) == 0) return rb;
      }
    }
  }
  throw std::runtime_error("cubic has no root in the field");
}

std::array<Elem, 3> special_cubic_roots(const Field& f, Elem t) {
  if (f.l() != 2 || f.k() % 2 == 0)
    throw std::invalid_argument("special_cubic_roots requires l=2, k odd");
  if (!f.in_subfield(t) || t == 0 || t == 1)
    throw std::invalid_argument("t must lie in GF(q)\\GF(2)");
  const Elem one_plus_t = f.add(t, 1);
  // k odd: gcd(3, q-1) = 1, so 1+t has a unique cube root in GF(q).
  const std::uint32_t qm1 = f.q() - 1;
  std::uint32_t inv3 = 0;
  for (std::uint32_t e = 1; e <= 3 * qm1; ++e)
    if ((3ull * e) % qm1 == 1 % qm1) {
      inv3 = e;
      break;
    }
  const Elem alpha = f.pow(one_plus_t, inv3);
  const Elem a2 = f.mul(alpha, alpha);
  const auto om = f.omega_elements();
  if (om.size() != 2) throw std::logic_error("no omega in even-degree field");
  const Elem w = om[0], w2 = f.mul(om[0], om[0]);
  std::array<Elem, 3> roots = {
      f.add(alpha, a2),
      f.add(f.mul(alpha, w), f.mul(a2, w2)),
      f.add(f.mul(alpha, w2), f.mul(a2, w)),
  };
  const Elem b = f.add(t, f.mul(t, t));
  for (Elem r : roots)
    if (f.add(eval_cubic(f, one_plus_t, b, r), 0) != 0)
      throw std::logic_error("special cubic root failed verification");
  return roots;
}

FactorPattern quartic_classify(const Field& f, Elem a2, Elem a1, Elem a0) {
  if (a0 == 0 || a1 == 0)
    throw std::invalid_argument("quartic_classify requires a0*a1 nonzero");
  // Roots of the resolvent cubic y^3 + a2 y + a1 (separable since a1 != 0).
  std::vector<Elem> rs;
  for (Elem y = 0; y < f.size(); ++y)
    if (eval_cubic(f, a2, a1, y) == 0) rs.push_back(y);
  const Elem inv_a1sq = f.inv(f.mul(a1, a1));
  auto trace_w = [&](Elem r) {
    return f.trace_abs(f.mul(a0, f.mul(f.mul(r, r), inv_a1sq)));
  };
  if (rs.size() == 3) {
    int zeros = 0;
    for (Elem r : rs)
      if (trace_w(r) == 0) ++zeros;
    if (zeros == 3) return {1, 1, 1, 1};
    if (zeros == 1) return {2, 2};
    throw std::logic_error("unexpected trace pattern on resolvent roots");
  }
  if (rs.size() == 1) return trace_w(rs[0]) == 0 ? FactorPattern{1, 1, 2}
                                                 : FactorPattern{4};
  if (rs.empty()) return {1, 3};
  throw std::logic_error("separable cubic with 2 roots");
}

FactorPattern brute_factor(const Field& f, std::span<const Elem> coeffs) {
  const int deg = static_cast<int>(coeffs.size());
  if (deg < 1 || deg > 4) throw std::invalid_argument("degree must be 1..4");
  std::vector<Elem> c(coeffs.begin(), coeffs.end());
  c.push_back(1);  // monic
  FactorPattern pat;
  // Strip roots with multiplicity.
  bool progress = true;
  while (c.size() > 1 && progress) {
    progress = false;
    for (Elem r = 0; r < f.size(); ++r) {
      Elem acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, r), c[i]);
      if (acc == 0) {
        pat.push_back(1);
        // Synthetic division by (x + r).
        std::vector<Elem> qout(c.size() - 1);
        Elem carry = c.back();
        for (std::size_t i = c.size() - 1; i-- > 0;) {
          qout[i] = carry;
          carry = f.add(c[i], f.mul(carry, r));
        }
        c = std::move(qout);
        progress = true;
        break;
      }
    }
  }
  const int rdeg = static_cast<int>(c.size()) - 1;
  if (rdeg == 2) {
    pat.push_back(2);
  } else if (rdeg == 3) {
    pat.push_back(3);
  } else if (rdeg == 4) {
    if (c[1] == 0 && c[3] == 0) {
      // Biquadratic: a perfect square of a rootless (hence irreducible)
      // quadratic in characteristic 2.
      pat.push_back(2);
      pat.push_back(2);
    } else {
      // Separable and rootless: (2,2) iff x^(2^(2n)) == x mod c.
      auto mulmod = [&](const std::vector<Elem>& u, const std::vector<Elem>& v) {
        std::vector<Elem> p(7, 0);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) p[i + j] ^= f.mul(u[i], v[j]);
        for (int d = 6; d >= 4; --d) {
          const Elem lead = p[d];
          if (lead == 0) continue;
          p[d] = 0;
          for (int i = 0; i < 4; ++i) p[d - 4 + i] ^= f.mul(lead, c[i]);
        }
        p.resize(4);
        return p;
      };
      std::vector<Elem> xp = {0, 1, 0, 0};
      for (int i = 0; i < 2 * f.n(); ++i) xp = mulmod(xp, xp);
      if (xp == std::vector<Elem>{0, 1, 0, 0}) {
        pat.push_back(2);
        pat.push_back(2);
      } else {
        pat.push_back(4);
      }
    }
  }
  std::sort(pat.begin(), pat.end());
  return pat;
}

Elem dickson_eval(const Field& f, unsigned r, Elem x, Elem a) {
  if (r == 0 || r > 63) throw std::invalid_argument("dickson degree 1..63");
  // D_0 = 2 = 0, D_1 = x, D_r = x D_{r-1} + a D_{r-2} in characteristic 2.
  Elem dm2 = 0, dm1 = x;
  for (unsigned i = 2; i <= r; ++i) {
    const Elem d = f.add(f.mul(x, dm1), f.mul(a, dm2));
    dm2 = dm1;
    dm1 = d;
  }
  return dm1;
}

bool dickson_is_permutation(const Field& f, unsigned r) {
  const std::uint64_t m = (std::uint64_t{1} << (2 * f.n())) - 1;
  return std::gcd<std::uint64_t>(r, m) == 1;
}

}  // namespace t21
