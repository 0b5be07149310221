#include "t21/codes.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "t21/fwht.hpp"

namespace t21 {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// GF(2) rank of 32-bit vectors.
int rank_u32(const std::vector<std::uint32_t>& vecs) {
  std::vector<std::uint32_t> basis;
  for (std::uint32_t v : vecs) {
    for (std::uint32_t b : basis) v = std::min(v, v ^ b);
    if (v) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

int leading_bit(const Word& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i]) return static_cast<int>(i) * 64 + 63 - std::countl_zero(w[i]);
  return -1;
}

// Reduces rows to an independent spanning set, eliminating on leading bits.
std::vector<Word> word_basis(const std::vector<Word>& rows) {
  std::map<int, Word> by_lead;
  for (Word v : rows) {
    int lead = leading_bit(v);
    while (lead >= 0) {
      auto it = by_lead.find(lead);
      if (it == by_lead.end()) {
        by_lead.emplace(lead, std::move(v));
        break;
      }
      for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= it->second[i];
      lead = leading_bit(v);
    }
  }
  std::vector<Word> basis;
  basis.reserve(by_lead.size());
  for (auto& [lead, w] : by_lead) basis.push_back(std::move(w));
  return basis;
}

struct SpectrumAndK {
  WalshSpectrum spec;
  std::vector<std::uint32_t> k_pairs;  // (mask_index << 16) | b
};

SpectrumAndK compute_spectrum(const Field& f, const std::vector<Elem>& table,
                              int jobs) {
  const int n = f.n();
  const std::uint32_t size = f.size();
  if (table.size() != size)
    throw std::invalid_argument("value table length must be 2^n");
  if (table[0] != 0) throw std::invalid_argument("walsh_spectrum needs f(0)=0");

  const std::vector<Elem> mask = trace_mask_table(f);
  const std::int64_t full = std::int64_t{1} << n;
  const std::int64_t parseval = std::int64_t{1} << (2 * n);

  SpectrumAndK out;
  out.spec.n = n;
  std::mutex merge_mu;
  const int nthreads = std::min<int>(resolve_jobs(jobs), size);

  auto worker = [&](std::uint32_t lo, std::uint32_t hi) {
    std::vector<std::int32_t> buf(size);
    std::map<std::int64_t, std::uint64_t> local;
    std::vector<std::uint32_t> local_k;
    for (std::uint32_t b = lo; b < hi; ++b) {
      const Elem mb = mask[b];
      for (std::uint32_t x = 0; x < size; ++x)
        buf[x] = 1 - 2 * (std::popcount(mb & table[x]) & 1);
      fwht(buf.data(), n);
      std::int64_t energy = 0;
      for (std::uint32_t m = 0; m < size; ++m) {
        const std::int64_t w = buf[m];
        energy += w * w;
        ++local[w];
        if (w == full) local_k.push_back((m << 16) | b);
      }
      if (energy != parseval)
        throw std::runtime_error("Parseval check failed in walsh_spectrum");
    }
    std::scoped_lock lk(merge_mu);
    for (const auto& [w, c] : local) out.spec.counts[w] += c;
    out.k_pairs.insert(out.k_pairs.end(), local_k.begin(), local_k.end());
  };

  std::vector<std::thread> pool;
  const std::uint32_t chunk = (size + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t) {
    const std::uint32_t lo = t * chunk, hi = std::min(size, lo + chunk);
    if (lo < hi) pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool) th.join();
  out.spec.validate();
  return out;
}

}  // namespace

std::uint32_t word_weight(const Word& w) {
  std::uint32_t s = 0;
  for (std::uint64_t limb : w) s += std::popcount(limb);
  return s;
}

std::vector<Elem> trace_mask_table(const Field& f) {
  const int n = f.n();
  std::vector<Elem> mask(f.size(), 0);
  std::vector<Elem> unit(n);
  for (int j = 0; j < n; ++j) {
    Elem m = 0;
    for (int i = 0; i < n; ++i)
      m |= f.trace_abs(f.mul(Elem{1} << j, Elem{1} << i)) << i;
    unit[j] = m;
  }
  for (std::uint32_t a = 1; a < f.size(); ++a)
    mask[a] = mask[a & (a - 1)] ^ unit[std::countr_zero(a)];
  return mask;
}

void WalshSpectrum::validate() const {
  const std::int64_t full = std::int64_t{1} << n;
  std::uint64_t total = 0;
  std::int64_t m1 = 0, m2 = 0;
  for (const auto& [w, c] : counts) {
    if (w > full || w < -full)
      throw std::runtime_error("Walsh value out of range");
    if (n >= 1 && (w & 1))
      throw std::runtime_error("odd Walsh value over GF(2^n), n >= 1");
    total += c;
    m1 += w * static_cast<std::int64_t>(c);
    m2 += w * w * static_cast<std::int64_t>(c);
  }
  if (total != std::uint64_t{1} << (2 * n))
    throw std::runtime_error("Walsh counts do not sum to 2^(2n)");
  if (m1 != std::int64_t{1} << (2 * n))
    throw std::runtime_error("first Walsh power moment violated");
  if (m2 != std::int64_t{1} << (3 * n))
    throw std::runtime_error("second Walsh power moment violated");
}

WalshSpectrum walsh_spectrum(const Field& f, const std::vector<Elem>& table,
                             int jobs) {
  return compute_spectrum(f, table, jobs).spec;
}

WalshSpectrum walsh_spectrum(const MappingSpec& s, int jobs) {
  return walsh_spectrum(*s.field, value_table(s), jobs);
}

std::int64_t walsh_naive(const Field& f, const std::vector<Elem>& table,
                         Elem a, Elem b) {
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const Elem arg = f.add(f.mul(a, x), f.mul(b, table[x]));
    sum += f.trace_abs(arg) ? -1 : 1;
  }
  return sum;
}

std::vector<std::int64_t> walsh_row(const Field& f,
                                    const std::vector<Elem>& table, Elem b) {
  const std::vector<Elem> mask = trace_mask_table(f);
  std::vector<std::int32_t> buf(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x)
    buf[x] = 1 - 2 * (std::popcount(mask[b] & table[x]) & 1);
  fwht(buf.data(), f.n());
  std::vector<std::int64_t> row(f.size());
  for (std::uint32_t a = 0; a < f.size(); ++a) row[a] = buf[mask[a]];
  return row;
}

std::int64_t quadratic_rank_walsh(const MappingSpec& s, Elem a, Elem b) {
  const Field& f = *s.field;
  const int n = f.n();
  if (std::popcount(s.outer_d) > 2)
    throw std::invalid_argument("quadratic_rank_walsh: outer exponent has "
                                "2-weight > 2");
  for (std::uint32_t d : s.trace_exponents)
    if (std::popcount(d) > 2)
      throw std::invalid_argument("quadratic_rank_walsh: trace exponent has "
                                  "2-weight > 2");

  auto phi = [&](Elem x) -> int {
    return f.trace_abs(f.add(f.mul(a, x), f.mul(b, evaluate(s, x))));
  };

  // Bilinear form B(e_i, e_j) on the standard basis.
  std::vector<Elem> phi_e(n);
  for (int i = 0; i < n; ++i) phi_e[i] = phi(Elem{1} << i);
  std::vector<std::uint32_t> rows(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int bij =
          phi((Elem{1} << i) ^ (Elem{1} << j)) ^ phi_e[i] ^ phi_e[j];
      rows[i] |= static_cast<std::uint32_t>(bij) << j;
    }

  // Kernel of B by Gauss-Jordan; pivot columns span a transversal.
  std::vector<std::uint32_t> reduced;
  std::vector<int> pivot_cols;
  std::uint32_t pivot_mask = 0;
  for (std::uint32_t r : rows) {
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (r >> pivot_cols[i] & 1) r ^= reduced[i];
    if (r == 0) continue;
    const int col = std::countr_zero(r);
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i] >> col & 1) reduced[i] ^= r;
    reduced.push_back(r);
    pivot_cols.push_back(col);
    pivot_mask |= std::uint32_t{1} << col;
  }
  std::vector<std::uint32_t> kernel_basis;
  for (int c = 0; c < n; ++c) {
    if (pivot_mask >> c & 1) continue;
    std::uint32_t y = std::uint32_t{1} << c;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i] >> c & 1) y |= std::uint32_t{1} << pivot_cols[i];
    kernel_basis.push_back(y);
  }
  const int d = static_cast<int>(kernel_basis.size());

  // Vanishing test on the kernel V.
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << d); ++m) {
    Elem v = 0;
    for (int i = 0; i < d; ++i)
      if (m >> i & 1) v ^= kernel_basis[i];
    if (phi(v)) return 0;
  }

  // Sign via the transversal U = span{e_c : c pivot}; W = 2^d * sum_U.
  const int r = n - d;
  std::int64_t sum = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << r); ++m) {
    Elem u = 0;
    for (int i = 0; i < r; ++i)
      if (m >> i & 1) u ^= Elem{1} << pivot_cols[i];
    sum += phi(u) ? -1 : 1;
  }
  return (std::int64_t{1} << d) * sum;
}

std::vector<Word> generator_rows(const MappingSpec& s) {
  const Field& f = *s.field;
  const std::uint32_t length = f.order();
  const std::vector<Elem> table = value_table(s);
  const std::vector<Elem> mask = trace_mask_table(f);
  const std::size_t limbs = (length + 63) / 64;
  std::vector<Word> rows;
  rows.reserve(2 * f.n());
  auto add_row = [&](Elem a, Elem b) {
    Word w(limbs, 0);
    for (std::uint32_t x = 1; x <= length; ++x) {
      const int bit = (std::popcount(mask[a] & x) ^
                       std::popcount(mask[b] & table[x])) &
                      1;
      if (bit) w[(x - 1) / 64] |= std::uint64_t{1} << ((x - 1) % 64);
    }
    rows.push_back(std::move(w));
  };
  for (int i = 0; i < f.n(); ++i) add_row(Elem{1} << i, 0);
  for (int i = 0; i < f.n(); ++i) add_row(0, Elem{1} << i);
  return rows;
}

std::vector<Word> span_codewords(const std::vector<Word>& rows,
                                 std::uint32_t length) {
  if (rows.empty()) return {Word((length + 63) / 64, 0)};
  std::vector<Word> basis = word_basis(rows);
  if (basis.size() > 16)
    throw std::runtime_error("span dimension > 16: exhaustive enumeration "
                             "exceeds capacity");
  const std::size_t limbs = rows.front().size();
  std::vector<Word> words;
  words.reserve(std::size_t{1} << basis.size());
  words.emplace_back(limbs, 0);
  for (const Word& b : basis) {
    const std::size_t prev = words.size();
    for (std::size_t i = 0; i < prev; ++i) {
      Word w = words[i];
      for (std::size_t j = 0; j < limbs; ++j) w[j] ^= b[j];
      words.push_back(std::move(w));
    }
  }
  return words;
}

SelfOrthReport is_self_orthogonal(const std::vector<Word>& basis_rows) {
  SelfOrthReport rep;
  rep.self_orthogonal = true;
  rep.weights_div_4 = true;
  for (std::size_t i = 0; i < basis_rows.size(); ++i) {
    if (word_weight(basis_rows[i]) % 4 != 0) rep.weights_div_4 = false;
    for (std::size_t j = i; j < basis_rows.size(); ++j) {
      std::uint32_t dot = 0;
      for (std::size_t t = 0; t < basis_rows[i].size(); ++t)
        dot += std::popcount(basis_rows[i][t] & basis_rows[j][t]);
      if (dot & 1) rep.self_orthogonal = false;
    }
  }
  return rep;
}

MinimalReport is_minimal(const std::vector<Word>& codewords,
                         bool force_exhaustive) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < codewords.size(); ++i)
    if (word_weight(codewords[i]) != 0) nz.push_back(i);
  if (nz.empty()) return {true, "sufficient-condition"};

  std::vector<std::uint32_t> wt(nz.size());
  for (std::size_t i = 0; i < nz.size(); ++i)
    wt[i] = word_weight(codewords[nz[i]]);
  const auto [wmin, wmax] = std::minmax_element(wt.begin(), wt.end());
  if (!force_exhaustive && 2 * *wmin > *wmax)
    return {true, "sufficient-condition"};

  if (nz.size() > (std::size_t{1} << 16))
    throw std::runtime_error("exhaustive minimality check exceeds capacity");
  std::vector<std::size_t> order(nz.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return wt[a] < wt[b]; });
  for (std::size_t ui = 0; ui < order.size(); ++ui) {
    const Word& u = codewords[nz[order[ui]]];
    for (std::size_t vi = 0; vi < ui; ++vi) {
      if (wt[order[vi]] >= wt[order[ui]]) continue;
      const Word& v = codewords[nz[order[vi]]];
      bool covered = true;
      for (std::size_t t = 0; t < u.size() && covered; ++t)
        covered = (u[t] & v[t]) == v[t];
      if (covered) return {false, "exhaustive"};
    }
  }
  return {true, "exhaustive"};
}

CodeReport build_code(const MappingSpec& s, int jobs) {
  const Field& f = *s.field;
  const int n = f.n();
  SpectrumAndK sk = compute_spectrum(f, value_table(s), jobs);

  CodeReport rep;
  rep.n = n;
  rep.length = f.order();
  rep.spectrum = std::move(sk.spec);

  // K must be an additive subgroup: |K| a power of two equal to 2^rank.
  const std::size_t ksize = sk.k_pairs.size();
  if (ksize == 0 || (ksize & (ksize - 1)) != 0)
    throw std::runtime_error("|K| is not a power of two");
  const int rank = rank_u32(sk.k_pairs);
  if (ksize != std::size_t{1} << rank)
    throw std::runtime_error("K is not closed under addition");
  rep.d_K = rank;
  rep.dimension = 2 * n - rank;

  const std::uint64_t coset = std::uint64_t{1} << rank;
  for (const auto& [w, c] : rep.spectrum.counts) {
    if (c % coset != 0)
      throw std::runtime_error("Walsh count not divisible by |K|");
    const std::int64_t weight = (std::int64_t{1} << (n - 1)) - w / 2;
    rep.weight_distribution[static_cast<std::uint32_t>(weight)] += c / coset;
  }
  std::uint64_t total = 0;
  for (const auto& [w, c] : rep.weight_distribution) {
    if (w > rep.length) throw std::runtime_error("codeword weight > length");
    total += c;
  }
  if (total != std::uint64_t{1} << rep.dimension ||
      rep.weight_distribution[0] != 1)
    throw std::runtime_error("weight distribution inconsistent with 2^dim");

  const std::vector<Word> rows = generator_rows(s);
  if (word_basis(rows).size() != static_cast<std::size_t>(rep.dimension))
    throw std::runtime_error("generator rank disagrees with 2n - d_K");
  const SelfOrthReport so = is_self_orthogonal(rows);
  rep.self_orthogonal = so.self_orthogonal;
  rep.weights_div_4 = true;
  for (const auto& [w, c] : rep.weight_distribution)
    if (w % 4 != 0) rep.weights_div_4 = false;

  std::uint32_t wmin = rep.length, wmax = 0;
  for (const auto& [w, c] : rep.weight_distribution)
    if (w != 0) wmin = std::min(wmin, w), wmax = std::max(wmax, w);
  if (2 * wmin > wmax) {
    rep.minimal = true;
    rep.minimal_method = "sufficient-condition";
  } else {
    const MinimalReport mr = is_minimal(span_codewords(rows, rep.length));
    rep.minimal = mr.minimal;
    rep.minimal_method = mr.method;
  }
  return rep;
}

std::map<std::uint32_t, std::uint64_t> predicted_distribution(Theorem t,
                                                              int k, int l) {
  const int n = k * l;
  if (k < 1 || n > Field::kMaxN)
    throw std::invalid_argument("k*l out of supported range");
  switch (t) {
    case Theorem::T51:
      if (l % 2 == 0 || l < 3)
        throw std::invalid_argument("Theorem 5.1 needs odd l >= 3");
      break;
    case Theorem::T52:
      if (k % 2 == 0 || l % 2 == 0 || l < 3)
        throw std::invalid_argument("Theorem 5.2 needs odd k and odd l >= 3");
      break;
    case Theorem::T53:
      if (l != 2 || k % 2 == 0 || k < 3)
        throw std::invalid_argument("Theorem 5.3 needs l = 2 and odd k >= 3");
      break;
  }

  // Exact power-of-two combinations; shift by 4 to keep exponents >= 0.
  constexpr int kShift = 4;
  auto pw = [](int e) { return __int128{1} << (e + kShift); };
  auto fix = [](__int128 v) {
    if (v < 0 || v % (__int128{1} << kShift) != 0)
      throw std::runtime_error("non-integral predicted multiplicity");
    return static_cast<std::uint64_t>(v >> kShift);
  };

  std::map<std::uint32_t, std::uint64_t> dist;
  dist[0] = 1;
  const std::uint32_t half = std::uint32_t{1} << (n - 1);
  std::uint32_t dev = 0;
  __int128 mid = 0, lo = 0, hi = 0;
  switch (t) {
    case Theorem::T51:
      dev = std::uint32_t{1} << ((n + k) / 2 - 1);
      mid = pw(n - k) + pw(n + k) - pw(n) - pw(0);
      lo = pw((n + k) / 2 - 1) - pw((n - k) / 2 - 1) + pw(n - 1) - pw(n - k - 1);
      hi = pw((n - k) / 2 - 1) - pw((n + k) / 2 - 1) + pw(n - 1) - pw(n - k - 1);
      break;
    case Theorem::T52:
      dev = std::uint32_t{1} << ((n + 1) / 2 - 1);
      mid = pw(n - 1) + pw(n + k) - pw(n - 1 + k) - pw(0);
      // The low-weight multiplicity must exceed the high one: the first
      // Walsh power moment forces count(+dev) - count(-dev) =
      // (2^{2n} - 2^{2n-k}) / 2^{(n+1)/2} > 0, and full enumeration of the
      // [511,12] instance agrees.
      lo = pw((n + 1) / 2 - 2 + k) - pw((n + 1) / 2 - 2) + pw(n - 2 + k) -
           pw(n - 2);
      hi = pw((n + 1) / 2 - 2) - pw((n + 1) / 2 - 2 + k) + pw(n - 2 + k) -
           pw(n - 2);
      break;
    case Theorem::T53:
      dev = std::uint32_t{1} << (n / 2);
      mid = pw(n - 2) + pw(n + k) - pw(n - 2 + k) - pw(0);
      lo = pw(n / 2 - 2 + k) - pw(n / 2 - 2) + pw(n - 3 + k) - pw(n - 3);
      hi = pw(n / 2 - 2) - pw(n / 2 - 2 + k) + pw(n - 3 + k) - pw(n - 3);
      break;
  }
  dist[half] = fix(mid);
  dist[half - dev] = fix(lo);
  dist[half + dev] = fix(hi);
  std::uint64_t total = 0;
  for (const auto& [w, c] : dist) total += c;
  if (total != std::uint64_t{1} << (n + k))
    throw std::runtime_error("predicted multiplicities do not sum to 2^(n+k)");
  return dist;
}

std::array<std::uint64_t, 3> solve_frequency_system(
    int n, int d_K, std::array<std::int64_t, 3> values) {
  const std::int64_t full = std::int64_t{1} << n;
  for (int i = 0; i < 3; ++i) {
    if (values[i] == full)
      throw std::invalid_argument("value 2^n duplicates v_0: singular system");
    for (int j = i + 1; j < 3; ++j)
      if (values[i] == values[j])
        throw std::invalid_argument("repeated Walsh values: singular system");
  }
  const __int128 x0 = __int128{1} << d_K;
  const __int128 r0 = (__int128{1} << (2 * n)) - x0;
  const __int128 r1 = (__int128{1} << (2 * n)) - full * x0;
  const __int128 r2 = (__int128{1} << (3 * n)) - __int128{full} * full * x0;
  const __int128 v1 = values[0], v2 = values[1], v3 = values[2];
  const __int128 det = (v2 - v1) * (v3 - v1) * (v3 - v2);
  // Cramer numerators for the Vandermonde system in (X_1, X_2, X_3).
  const __int128 n1 =
      r0 * (v2 * v3 * (v3 - v2)) - r1 * (v3 * v3 - v2 * v2) + r2 * (v3 - v2);
  const __int128 n2 =
      -(r0 * (v1 * v3 * (v3 - v1)) - r1 * (v3 * v3 - v1 * v1) +
        r2 * (v3 - v1));
  const __int128 n3 =
      r0 * (v1 * v2 * (v2 - v1)) - r1 * (v2 * v2 - v1 * v1) + r2 * (v2 - v1);
  std::array<__int128, 3> nums = {n1, n2, n3};
  std::array<std::uint64_t, 3> out{};
  for (int i = 0; i < 3; ++i) {
    if (nums[i] % det != 0)
      throw std::runtime_error("non-integral frequency solution");
    const __int128 x = nums[i] / det;
    if (x < 0) throw std::runtime_error("negative frequency solution");
    out[i] = static_cast<std::uint64_t>(x);
  }
  return out;
}

std::string code_report_to_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  j["d_K"] = r.d_K;
  nlohmann::ordered_json wd = nlohmann::ordered_json::object();
  for (const auto& [w, c] : r.weight_distribution) wd[std::to_string(w)] = c;
  j["weight_distribution"] = wd;
  nlohmann::ordered_json ws = nlohmann::ordered_json::object();
  for (const auto& [w, c] : r.spectrum.counts) ws[std::to_string(w)] = c;
  j["walsh_counts"] = ws;
  j["self_orthogonal"] = r.self_orthogonal;
  j["weights_div_4"] = r.weights_div_4;
  j["minimal"] = r.minimal;
  j["minimal_method"] = r.minimal_method;
  return j.dump(2);
}

}  // namespace t21
