#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "t21/gf.hpp"
#include "t21/mapping.hpp"

namespace t21 {

// Codeword / generator row, packed 64 bits per limb, coordinate x (over
// GF(2^n)*, ascending) at bit x-1.
using Word = std::vector<std::uint64_t>;

std::uint32_t word_weight(const Word& w);

// M[a] with bit i = Tr_{2^n/2}(a * e_i), so Tr(a*y) = parity(M[a] & y).
std::vector<Elem> trace_mask_table(const Field& f);

struct WalshSpectrum {
  int n = 0;
  std::map<std::int64_t, std::uint64_t> counts;  // value -> #{(a,b)}

  // Throws std::runtime_error if the power moments or value bounds fail.
  void validate() const;
};

// Fast per-b Hadamard transform over the whole (a,b) plane; `jobs` threads
// (0 = hardware concurrency).  Requires table.size() == 2^n and table[0] == 0.
WalshSpectrum walsh_spectrum(const Field& f, const std::vector<Elem>& table,
                             int jobs = 0);
WalshSpectrum walsh_spectrum(const MappingSpec& s, int jobs = 0);

// Naive double-loop oracle for a single (a,b).
std::int64_t walsh_naive(const Field& f, const std::vector<Elem>& table,
                         Elem a, Elem b);

// All W_f(a,b) for fixed b, indexed by a.
std::vector<std::int64_t> walsh_row(const Field& f,
                                    const std::vector<Elem>& table, Elem b);

// Walsh value at (a,b) through the bilinear-form kernel of the quadratic
// form Tr(ax + b f(x)): rank/vanishing test plus one transversal sum.
// Throws std::invalid_argument if any exponent has 2-weight > 2.
std::int64_t quadratic_rank_walsh(const MappingSpec& s, Elem a, Elem b);

struct CodeReport {
  int n = 0;
  std::uint32_t length = 0;            // 2^n - 1
  int d_K = 0;                         // log2 |{(a,b): W = 2^n}|
  int dimension = 0;                   // 2n - d_K
  std::map<std::uint32_t, std::uint64_t> weight_distribution;
  bool self_orthogonal = false;
  bool weights_div_4 = false;
  bool minimal = false;
  std::string minimal_method;          // "sufficient-condition" | "exhaustive"
  WalshSpectrum spectrum;
};

std::string code_report_to_json(const CodeReport& r);

// Builds C_f = {c_{a,b}} with c_{a,b} = (Tr(ax + b f(x)))_{x in GF(2^n)*}.
// Validates K is an additive subgroup of power-of-two size and that the
// count of each Walsh value is divisible by 2^{d_K}.
CodeReport build_code(const MappingSpec& s, int jobs = 0);

// The 2n generator rows for basis pairs (e_i, 0) and (0, e_i).
std::vector<Word> generator_rows(const MappingSpec& s);

// All 2^rank codewords spanned by `rows` (rank must be <= 16).
std::vector<Word> span_codewords(const std::vector<Word>& rows,
                                 std::uint32_t length);

struct SelfOrthReport {
  bool self_orthogonal = false;  // exact: all pairwise inner products 0
  bool weights_div_4 = false;    // sufficient condition on the given rows
};
SelfOrthReport is_self_orthogonal(const std::vector<Word>& basis_rows);

struct MinimalReport {
  bool minimal = false;
  std::string method;  // "sufficient-condition" | "exhaustive"
};
// Ashikhmin-Barg from the weight list first; exhaustive support-containment
// scan otherwise (or always, with force_exhaustive).
MinimalReport is_minimal(const std::vector<Word>& codewords,
                         bool force_exhaustive = false);

enum class Theorem { T51, T52, T53 };

// Closed-form weight distribution (5.1: l odd; 5.2: k,l odd; 5.3: l=2,
// k odd).  Throws on hypothesis violation or non-integral multiplicities.
std::map<std::uint32_t, std::uint64_t> predicted_distribution(Theorem t,
                                                              int k, int l);

// Solves the three power-moment equations for the frequencies of the three
// non-2^n Walsh values.  Throws on repeated values or non-integral counts.
std::array<std::uint64_t, 3> solve_frequency_system(
    int n, int d_K, std::array<std::int64_t, 3> values);

}  // namespace t21
