#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "t21/gf.hpp"
#include "t21/mapping.hpp"

namespace t21 {

// One exhaustive-search result group: all c for which
// c*x^outer_d + Tr_{q^l/q}(sum x^inner) is 2-to-1.
struct SearchHit {
  std::uint32_t outer_d = 1;
  std::vector<std::uint32_t> inner;  // canonical representatives, ascending
  std::vector<Elem> cs;              // ascending
};

// Symbolic c-ranges appearing in the result tables.
enum class CRangeKind {
  Explicit,       // plain value list
  SubfieldStar,   // GF(q)*
  SubfieldNot01,  // GF(q) \ {0,1}
  OmegaElements,  // the two solutions of w^2+w+1 = 0
  OmegaPower,     // {c : c^{q-1} has order 3}
  NotInSubfield,  // GF(q^l) \ GF(q)
  ThreeOrbit,     // structural: 3 subfield values closed under squaring
};

const char* c_range_name(CRangeKind kind);
std::optional<CRangeKind> c_range_from_name(const std::string& name);

// The concrete value set of a symbolic range (not Explicit/ThreeOrbit).
std::vector<Elem> c_range_values(const Field& f, CRangeKind kind);

// Whether `cs` (sorted) matches the range; ThreeOrbit checks the structural
// predicate, Explicit never matches.
bool c_range_matches(const Field& f, CRangeKind kind,
                     const std::vector<Elem>& cs);

// First symbolic kind the set satisfies, else Explicit.
CRangeKind classify_c_range(const Field& f, const std::vector<Elem>& cs);

// Exhaustive pruned searches: outer_d over the divisors of q^l - 1 in
// [1, q^l - 2], inner exponents over cyclotomic representatives with a
// nonzero trace term (pairs additionally d1 < d2, each term nonzero),
// c over GF(q^l)*.  Requires k > 1; k*l <= 10 unless allow_large
// (then <= 12).  Deterministic: hits sorted by (outer_d, inner).
std::vector<SearchHit> run_single_trace(const Field& f, int jobs = 0,
                                        bool allow_large = false);
std::vector<SearchHit> run_double_trace(const Field& f, int jobs = 0,
                                        bool allow_large = false);

// Unpruned reference search (no equivalence classes, no divisor cut); for
// soundness tests on tiny fields only.
std::vector<SearchHit> run_single_trace_unpruned(const Field& f);

struct TableRow {
  int k = 0, l = 0;
  std::vector<std::uint32_t> inner;
  CRangeKind c_range = CRangeKind::Explicit;
  std::vector<Elem> cs;  // only for Explicit
};

// Parses a fixture file {"rows": [{"k","l","inner","c_range"[,"cs"]}]}.
std::vector<TableRow> load_table_fixture(const std::string& json_text);

struct DiffEntry {
  std::vector<std::uint32_t> inner;
  std::string detail;
};

struct DiffReport {
  std::vector<DiffEntry> missing;     // in fixture, not in hits
  std::vector<DiffEntry> extra;       // in hits, not in fixture
  std::vector<DiffEntry> c_mismatch;  // exponents match, c-range does not
  bool empty() const {
    return missing.empty() && extra.empty() && c_mismatch.empty();
  }
  std::string to_string() const;
};

// Compares hits against the fixture rows for (f.k(), f.l()), up to
// cyclotomic equivalence of the exponents.
DiffReport diff_against_table(const Field& f,
                              const std::vector<SearchHit>& hits,
                              const std::vector<TableRow>& rows);

}  // namespace t21
