#pragma once

#include <optional>
#include <string>
#include <vector>

#include "t21/mapping.hpp"

namespace t21 {

// The sixteen constructed 2-to-1 families; T3x are single-trace-term,
// T4x are double-trace-term.
enum class FamilyId {
  T32_1,  // d = q+1,            l odd,  c in GF(q)*
  T32_2,  // d = 2q+2,           l odd,  k odd, c in GF(q)*
  T32_3,  // d = q^2+1,          l odd,  c in GF(q)*
  T33_1,  // d = 6,              k,l odd, c in GF(q)*
  T33_2,  // d = 4q+2,           k,l odd, c in GF(q)*
  T33_3,  // d = 2q+4,           k,l odd, c in GF(q)*
  T34,    // l=2, d = 2q+4,      k odd, c^(q-1) in GF(4)\GF(2)
  T35,    // l=2, d = 2^((k+1)/2)+2, k = 1 mod 4, c^(q-1) in GF(4)\GF(2)
  T37,    // l=2, d = 2^(2k-2)+2^(k-1), k odd, c^(q-1) in GF(4)\GF(2)
  T41,    // (q+1, 2q+2),        k even, l odd, c in GF(q)*, Tr_q(1/c+1)=1
  T42_1,  // (q+1, (q^2+q)/2),   l odd, c in GF(q)\{0,1}
  T42_2,  // ((q^2+q)/2, (q^2+q)/4), l odd, c in GF(q)\{0,1}
  T43,    // l=2, (6, 2q+4),     k odd, c^(q-1) in GF(4)\GF(2)
  T44_1,  // (6, (q^2+q)/2),     k,l odd, c in GF(q)\{0,1}
  T44_2,  // (4q+2, (q^2+q)/2),  k,l odd, c in GF(q)\{0,1}
  T44_3,  // (2q+4, (q^2+q)/2),  k,l odd, c in GF(q)\{0,1}
};

inline constexpr FamilyId kAllFamilies[] = {
    FamilyId::T32_1, FamilyId::T32_2, FamilyId::T32_3, FamilyId::T33_1,
    FamilyId::T33_2, FamilyId::T33_3, FamilyId::T34,   FamilyId::T35,
    FamilyId::T37,   FamilyId::T41,   FamilyId::T42_1, FamilyId::T42_2,
    FamilyId::T43,   FamilyId::T44_1, FamilyId::T44_2, FamilyId::T44_3,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

struct FamilyParams {
  FamilyId id;
  const Field* field;
  Elem c;
};

// Do (k, l) satisfy the family's structural hypotheses (parity, l value)?
bool family_shape_ok(FamilyId id, int k, int l);

// Full hypothesis check including the c-condition.
bool admissible(FamilyId id, const Field& f, Elem c);

// Trace exponents, reduced mod q^l-1.  Requires family_shape_ok.
std::vector<std::uint32_t> family_exponents(FamilyId id, int k, int l);

// Throws with the violated hypothesis named if params are inadmissible.
MappingSpec build(const FamilyParams& params);

struct FamilyReport {
  FamilyId id;
  int k, l;
  std::vector<Elem> admissible_c;
  std::vector<Elem> failed_c;  // admissible c whose spec is not 2-to-1
  bool passed() const { return failed_c.empty(); }
};

FamilyReport verify_family(FamilyId id, const Field& f);

}  // namespace t21
