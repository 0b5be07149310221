#include "t21/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace t21 {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::uint32_t> proper_divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d < n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

struct Shard {
  std::uint32_t outer;
  std::vector<std::uint32_t> inner;
};

// All c for which c*x^outer + Tr(sum x^inner) is 2-to-1, by saturating
// image counts with early exit on the third preimage.
std::vector<Elem> scan_shard(const Field& f, const Shard& sh) {
  const std::uint32_t size = f.size();
  const std::uint32_t N = f.order();
  std::vector<std::uint32_t> P(size);  // log of x^outer
  std::vector<Elem> T(size);           // trace part
  for (std::uint32_t x = 1; x < size; ++x) {
    P[x] = static_cast<std::uint32_t>(
        (std::uint64_t{sh.outer} * f.log(x)) % N);
    Elem t = 0;
    for (std::uint32_t d : sh.inner) t ^= f.trace_rel(f.pow(x, d));
    T[x] = t;
  }
  std::vector<Elem> cs;
  std::vector<std::uint8_t> cnt(size);
  for (std::uint32_t lc = 0; lc < N; ++lc) {
    std::memset(cnt.data(), 0, size);
    cnt[0] = 1;  // x = 0 maps to 0
    std::uint32_t pairs = 0;
    bool ok = true;
    for (std::uint32_t x = 1; x < size; ++x) {
      const Elem v = f.exp(lc + P[x]) ^ T[x];
      const std::uint8_t c = ++cnt[v];
      if (c == 2) {
        ++pairs;
      } else if (c == 3) {
        ok = false;
        break;
      }
    }
    if (ok && 2 * pairs == size) cs.push_back(f.exp(lc));
  }
  std::sort(cs.begin(), cs.end());
  return cs;
}

std::vector<SearchHit> run_shards(const Field& f, std::vector<Shard> shards,
                                  int jobs) {
  std::vector<SearchHit> hits;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<SearchHit> local;
    for (std::size_t i = next.fetch_add(1); i < shards.size();
         i = next.fetch_add(1)) {
      std::vector<Elem> cs = scan_shard(f, shards[i]);
      if (!cs.empty())
        local.push_back({shards[i].outer, shards[i].inner, std::move(cs)});
    }
    std::scoped_lock lk(mu);
    hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                std::make_move_iterator(local.end()));
  };
  const int nthreads =
      std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(
                                                    shards.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) {
              return std::tie(a.outer_d, a.inner) <
                     std::tie(b.outer_d, b.inner);
            });
  return hits;
}

void check_capacity(const Field& f, bool allow_large) {
  if (f.k() <= 1)
    throw std::invalid_argument("search requires k > 1");
  if (f.n() > 12)
    throw std::invalid_argument("search capacity is k*l <= 12");
  if (f.n() > 10 && !allow_large)
    throw std::runtime_error(
        "k*l > 10 search is gated behind the long-run flag");
}

// Canonical cyclotomic representatives with a nonzero trace term.  Powers
// of two are excluded: Tr(x^(2^j)) = Tr(x)^(2^j) is linearized, and the
// mappings it produces are 2-to-1 for trivial kernel reasons the result
// tables leave out.
std::vector<std::uint32_t> canonical_inner(const Field& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d < f.order(); ++d)
    if (std::popcount(d) > 1 && cyclotomic_canonical(f, d).canonical == d &&
        !trace_term_is_zero(f, d))
      out.push_back(d);
  return out;
}

}  // namespace

std::vector<SearchHit> run_single_trace(const Field& f, int jobs,
                                        bool allow_large) {
  check_capacity(f, allow_large);
  const std::vector<std::uint32_t> outers = proper_divisors(f.order());
  const std::vector<std::uint32_t> inners = canonical_inner(f);
  std::vector<Shard> shards;
  for (std::uint32_t o : outers)
    for (std::uint32_t d : inners) shards.push_back({o, {d}});
  return run_shards(f, std::move(shards), jobs);
}

std::vector<SearchHit> run_double_trace(const Field& f, int jobs,
                                        bool allow_large) {
  check_capacity(f, allow_large);
  const std::vector<std::uint32_t> outers = proper_divisors(f.order());
  const std::vector<std::uint32_t> inners = canonical_inner(f);
  std::vector<Shard> shards;
  for (std::uint32_t o : outers)
    for (std::size_t i = 0; i < inners.size(); ++i)
      for (std::size_t j = i + 1; j < inners.size(); ++j)
        shards.push_back({o, {inners[i], inners[j]}});
  return run_shards(f, std::move(shards), jobs);
}

std::vector<SearchHit> run_single_trace_unpruned(const Field& f) {
  if (f.n() > 6)
    throw std::invalid_argument("unpruned reference search limited to n <= 6");
  std::vector<Shard> shards;
  for (std::uint32_t o = 1; o < f.order(); ++o)
    for (std::uint32_t d = 1; d < f.order(); ++d) shards.push_back({o, {d}});
  return run_shards(f, std::move(shards), 0);
}

const char* c_range_name(CRangeKind kind) {
  switch (kind) {
    case CRangeKind::Explicit: return "explicit";
    case CRangeKind::SubfieldStar: return "subfield_star";
    case CRangeKind::SubfieldNot01: return "subfield_not_01";
    case CRangeKind::OmegaElements: return "omega_elements";
    case CRangeKind::OmegaPower: return "omega_power";
    case CRangeKind::NotInSubfield: return "not_in_subfield";
    case CRangeKind::ThreeOrbit: return "orbit3_subfield";
  }
  return "?";
}

std::optional<CRangeKind> c_range_from_name(const std::string& name) {
  for (CRangeKind k :
       {CRangeKind::Explicit, CRangeKind::SubfieldStar,
        CRangeKind::SubfieldNot01, CRangeKind::OmegaElements,
        CRangeKind::OmegaPower, CRangeKind::NotInSubfield,
        CRangeKind::ThreeOrbit})
    if (name == c_range_name(k)) return k;
  return std::nullopt;
}

std::vector<Elem> c_range_values(const Field& f, CRangeKind kind) {
  std::vector<Elem> out;
  switch (kind) {
    case CRangeKind::SubfieldStar:
      for (Elem c = 1; c < f.size(); ++c)
        if (f.in_subfield(c)) out.push_back(c);
      break;
    case CRangeKind::SubfieldNot01:
      for (Elem c = 2; c < f.size(); ++c)
        if (f.in_subfield(c)) out.push_back(c);
      break;
    case CRangeKind::OmegaElements:
      out = f.omega_elements();
      std::sort(out.begin(), out.end());
      break;
    case CRangeKind::OmegaPower:
      for (Elem c = 1; c < f.size(); ++c)
        if (f.element_order(f.pow(c, static_cast<std::int64_t>(f.q()) - 1)) ==
            3)
          out.push_back(c);
      break;
    case CRangeKind::NotInSubfield:
      for (Elem c = 1; c < f.size(); ++c)
        if (!f.in_subfield(c)) out.push_back(c);
      break;
    default:
      throw std::invalid_argument("c-range has no fixed value set");
  }
  return out;
}

bool c_range_matches(const Field& f, CRangeKind kind,
                     const std::vector<Elem>& cs) {
  if (kind == CRangeKind::Explicit) return false;
  if (kind == CRangeKind::ThreeOrbit) {
    if (cs.size() != 3) return false;
    for (Elem c : cs) {
      if (!f.in_subfield(c)) return false;
      if (!std::binary_search(cs.begin(), cs.end(), f.mul(c, c))) return false;
    }
    return true;
  }
  return cs == c_range_values(f, kind);
}

CRangeKind classify_c_range(const Field& f, const std::vector<Elem>& cs) {
  for (CRangeKind k :
       {CRangeKind::SubfieldStar, CRangeKind::SubfieldNot01,
        CRangeKind::OmegaElements, CRangeKind::OmegaPower,
        CRangeKind::NotInSubfield, CRangeKind::ThreeOrbit})
    if (c_range_matches(f, k, cs)) return k;
  return CRangeKind::Explicit;
}

std::vector<TableRow> load_table_fixture(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<TableRow> rows;
  for (const auto& r : j.at("rows")) {
    TableRow row;
    row.k = r.at("k").get<int>();
    row.l = r.at("l").get<int>();
    row.inner = r.at("inner").get<std::vector<std::uint32_t>>();
    const auto kind = c_range_from_name(r.at("c_range").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown c_range in fixture");
    row.c_range = *kind;
    if (row.c_range == CRangeKind::Explicit)
      row.cs = r.at("cs").get<std::vector<Elem>>();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string DiffReport::to_string() const {
  if (empty()) return "tables match\n";
  std::ostringstream os;
  auto dump = [&os](const char* label, const std::vector<DiffEntry>& v) {
    for (const DiffEntry& e : v) {
      os << label << " (";
      for (std::size_t i = 0; i < e.inner.size(); ++i)
        os << (i ? "," : "") << e.inner[i];
      os << ")";
      if (!e.detail.empty()) os << ": " << e.detail;
      os << "\n";
    }
  };
  dump("missing from results", missing);
  dump("extra in results", extra);
  dump("c-range mismatch at", c_mismatch);
  return os.str();
}

DiffReport diff_against_table(const Field& f,
                              const std::vector<SearchHit>& hits,
                              const std::vector<TableRow>& rows) {
  auto canon = [&](std::vector<std::uint32_t> inner) {
    for (auto& d : inner) d = cyclotomic_canonical(f, d).canonical;
    std::sort(inner.begin(), inner.end());
    return inner;
  };
  DiffReport rep;
  std::map<std::vector<std::uint32_t>, const SearchHit*> by_key;
  for (const SearchHit& h : hits) {
    if (h.outer_d != 1) {
      rep.extra.push_back({h.inner, "outer exponent " +
                                        std::to_string(h.outer_d)});
      continue;
    }
    by_key[canon(h.inner)] = &h;
  }
  std::map<std::vector<std::uint32_t>, bool> claimed;
  for (const TableRow& row : rows) {
    if (row.k != f.k() || row.l != f.l()) continue;
    const auto key = canon(row.inner);
    claimed[key] = true;
    const auto it = by_key.find(key);
    if (it == by_key.end()) {
      rep.missing.push_back({row.inner, ""});
      continue;
    }
    const bool ok = row.c_range == CRangeKind::Explicit
                        ? it->second->cs == row.cs
                        : c_range_matches(f, row.c_range, it->second->cs);
    if (!ok)
      rep.c_mismatch.push_back(
          {row.inner, std::string("expected ") + c_range_name(row.c_range) +
                          ", got " + std::to_string(it->second->cs.size()) +
                          " value(s)"});
  }
  for (const auto& [key, hit] : by_key)
    if (!claimed.count(key)) rep.extra.push_back({hit->inner, ""});
  return rep;
}

}  // namespace t21
