#include "t21/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace t21 {

namespace {

bool is_single_trace(FamilyId id) {
  switch (id) {
    case FamilyId::T32_1:
    case FamilyId::T32_2:
    case FamilyId::T32_3:
    case FamilyId::T33_1:
    case FamilyId::T33_2:
    case FamilyId::T33_3:
    case FamilyId::T34:
    case FamilyId::T35:
    case FamilyId::T37:
      return true;
    default:
      return false;
  }
}

enum class CCond { SubfieldStar, SubfieldNot01, OmegaPower, TraceOne };

CCond c_condition(FamilyId id) {
  switch (id) {
    case FamilyId::T32_1:
    case FamilyId::T32_2:
    case FamilyId::T32_3:
    case FamilyId::T33_1:
    case FamilyId::T33_2:
    case FamilyId::T33_3:
      return CCond::SubfieldStar;
    case FamilyId::T34:
    case FamilyId::T35:
    case FamilyId::T37:
    case FamilyId::T43:
      return CCond::OmegaPower;
    case FamilyId::T41:
      return CCond::TraceOne;
    default:
      return CCond::SubfieldNot01;
  }
}

const char* shape_requirement(FamilyId id) {
  switch (id) {
    case FamilyId::T32_1:
    case FamilyId::T32_3:
    case FamilyId::T42_1:
      return "l odd";
    case FamilyId::T42_2:
      return "l odd and k >= 2";
    case FamilyId::T32_2:
    case FamilyId::T33_1:
    case FamilyId::T33_2:
    case FamilyId::T33_3:
    case FamilyId::T44_1:
    case FamilyId::T44_2:
    case FamilyId::T44_3:
      return "k and l odd";
    case FamilyId::T34:
    case FamilyId::T37:
      return "l = 2 and k odd";
    case FamilyId::T43:
      return "l = 2 and odd k >= 3";
    case FamilyId::T35:
      return "l = 2 and k = 1 (mod 4)";
    case FamilyId::T41:
      return "k even and l odd";
  }
  return "";
}

}  // namespace

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::T32_1: return "T32_1";
    case FamilyId::T32_2: return "T32_2";
    case FamilyId::T32_3: return "T32_3";
    case FamilyId::T33_1: return "T33_1";
    case FamilyId::T33_2: return "T33_2";
    case FamilyId::T33_3: return "T33_3";
    case FamilyId::T34:   return "T34";
    case FamilyId::T35:   return "T35";
    case FamilyId::T37:   return "T37";
    case FamilyId::T41:   return "T41";
    case FamilyId::T42_1: return "T42_1";
    case FamilyId::T42_2: return "T42_2";
    case FamilyId::T43:   return "T43";
    case FamilyId::T44_1: return "T44_1";
    case FamilyId::T44_2: return "T44_2";
    case FamilyId::T44_3: return "T44_3";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
  for (FamilyId id : kAllFamilies)
    if (family_name(id) == name) return id;
  return std::nullopt;
}

bool family_shape_ok(FamilyId id, int k, int l) {
  if (k < 1 || l < 1 || k * l < 2) return false;  // GF(2) has no x^1 form
  switch (id) {
    case FamilyId::T32_1:
    case FamilyId::T32_3:
    case FamilyId::T42_1:
      return l % 2 == 1;
    case FamilyId::T42_2:
      return l % 2 == 1 && k >= 2;  // (q^2+q)/4 needs 4 | q^2+q
    case FamilyId::T32_2:
    case FamilyId::T33_1:
    case FamilyId::T33_2:
    case FamilyId::T33_3:
    case FamilyId::T44_1:
    case FamilyId::T44_2:
    case FamilyId::T44_3:
      return k % 2 == 1 && l % 2 == 1;
    case FamilyId::T34:
    case FamilyId::T37:
      return l == 2 && k % 2 == 1;
    case FamilyId::T43:
      // k = 1 degenerates: the exponent 6 reduces to x^(q^l-1).
      return l == 2 && k % 2 == 1 && k >= 3;
    case FamilyId::T35:
      return l == 2 && k % 4 == 1;
    case FamilyId::T41:
      return k % 2 == 0 && l % 2 == 1;
  }
  return false;
}

std::vector<std::uint32_t> family_exponents(FamilyId id, int k, int l) {
  if (!family_shape_ok(id, k, l))
    throw std::invalid_argument("family requires " +
                                std::string(shape_requirement(id)));
  const std::uint64_t q = std::uint64_t{1} << k;
  const std::uint64_t N = (std::uint64_t{1} << (k * l)) - 1;
  auto red = [N](std::uint64_t e) {
    e %= N;
    return static_cast<std::uint32_t>(e == 0 ? N : e);
  };
  switch (id) {
    case FamilyId::T32_1: return {red(q + 1)};
    case FamilyId::T32_2: return {red(2 * q + 2)};
    case FamilyId::T32_3: return {red(q * q + 1)};
    case FamilyId::T33_1: return {red(6)};
    case FamilyId::T33_2: return {red(4 * q + 2)};
    case FamilyId::T33_3: return {red(2 * q + 4)};
    case FamilyId::T34:   return {red(2 * q + 4)};
    case FamilyId::T35:   return {red((std::uint64_t{1} << ((k + 1) / 2)) + 2)};
    case FamilyId::T37:
      return {red((std::uint64_t{1} << (2 * k - 2)) +
                  (std::uint64_t{1} << (k - 1)))};
    case FamilyId::T41:   return {red(q + 1), red(2 * q + 2)};
    case FamilyId::T42_1: return {red(q + 1), red((q * q + q) / 2)};
    case FamilyId::T42_2: return {red((q * q + q) / 2), red((q * q + q) / 4)};
    case FamilyId::T43:   return {red(6), red(2 * q + 4)};
    case FamilyId::T44_1: return {red(6), red((q * q + q) / 2)};
    case FamilyId::T44_2: return {red(4 * q + 2), red((q * q + q) / 2)};
    case FamilyId::T44_3: return {red(2 * q + 4), red((q * q + q) / 2)};
  }
  throw std::logic_error("unreachable");
}

bool admissible(FamilyId id, const Field& f, Elem c) {
  if (!family_shape_ok(id, f.k(), f.l())) return false;
  if (c == 0) return false;
  switch (c_condition(id)) {
    case CCond::SubfieldStar:
      return f.in_subfield(c);
    case CCond::SubfieldNot01:
      return f.in_subfield(c) && c != 1;
    case CCond::OmegaPower: {
      const Elem w = f.pow(c, static_cast<std::int64_t>(f.q()) - 1);
      return w > 1 && f.mul(w, w) == (w ^ 1u);  // w^2 + w + 1 = 0
    }
    case CCond::TraceOne:
      return f.in_subfield(c) &&
             f.subfield_abs_trace(f.add(f.inv(c), 1)) == 1;
  }
  return false;
}

MappingSpec build(const FamilyParams& params) {
  const Field& f = *params.field;
  if (!family_shape_ok(params.id, f.k(), f.l()))
    throw std::invalid_argument(family_name(params.id) + " requires " +
                                shape_requirement(params.id));
  if (!admissible(params.id, f, params.c))
    throw std::invalid_argument(family_name(params.id) +
                                ": c violates the family's hypothesis");
  return make_spec(f, params.c, 1, family_exponents(params.id, f.k(), f.l()));
}

FamilyReport verify_family(FamilyId id, const Field& f) {
  FamilyReport rep{id, f.k(), f.l(), {}, {}};
  if (!family_shape_ok(id, f.k(), f.l())) return rep;
  for (Elem c = 1; c < f.size(); ++c) {
    if (!admissible(id, f, c)) continue;
    rep.admissible_c.push_back(c);
    if (!is_two_to_one_count(build({id, &f, c}))) rep.failed_c.push_back(c);
  }
  return rep;
}

}  // namespace t21
