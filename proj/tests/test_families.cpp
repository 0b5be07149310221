#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "t21/families.hpp"

using namespace t21;

TEST_CASE("name round trip") {
  for (FamilyId id : kAllFamilies) {
    const auto back = family_from_name(family_name(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK(!family_from_name("T99").has_value());
}

TEST_CASE("exponent formula sanity") {
  using V = std::vector<std::uint32_t>;
  CHECK(family_exponents(FamilyId::T32_1, 2, 3) == V{5});
  CHECK(family_exponents(FamilyId::T35, 5, 2) == V{10});
  CHECK(family_exponents(FamilyId::T34, 3, 2) == V{20});
  CHECK(family_exponents(FamilyId::T34, 5, 2) == V{68});
  CHECK(family_exponents(FamilyId::T37, 3, 2) == V{20});
  CHECK(family_exponents(FamilyId::T37, 5, 2) == V{272});
  CHECK(family_exponents(FamilyId::T42_1, 3, 3) == V{9, 36});
  CHECK(family_exponents(FamilyId::T42_2, 3, 3) == V{36, 18});
  CHECK(family_exponents(FamilyId::T33_1, 3, 3) == V{6});
}

TEST_CASE("shape requirements") {
  CHECK(!family_shape_ok(FamilyId::T32_2, 2, 3));  // k even
  CHECK(!family_shape_ok(FamilyId::T35, 3, 2));    // k != 1 mod 4
  CHECK(family_shape_ok(FamilyId::T35, 5, 2));
  CHECK(!family_shape_ok(FamilyId::T41, 3, 3));    // k odd
  CHECK(family_shape_ok(FamilyId::T41, 2, 3));
  CHECK(!family_shape_ok(FamilyId::T32_1, 2, 2));  // l even
  CHECK(!family_shape_ok(FamilyId::T32_1, 1, 1));  // GF(2) excluded
  CHECK(!family_shape_ok(FamilyId::T43, 1, 2));    // degenerate exponent
  CHECK(family_shape_ok(FamilyId::T43, 3, 2));
  CHECK_THROWS(family_exponents(FamilyId::T35, 3, 2));
}

TEST_CASE("admissibility") {
  Field f23(2, 3);
  // T41 at k=2: c in GF(4)* with Tr_{4/2}(1/c + 1) = 1.
  const Elem w = f23.omega_elements()[0];
  CHECK(admissible(FamilyId::T41, f23, w));
  CHECK(!admissible(FamilyId::T41, f23, 1));  // Tr(1+1) = 0
  CHECK(!admissible(FamilyId::T41, f23, 0));
  // T32_1: all of GF(4)*.
  int cnt = 0;
  for (Elem c = 1; c < f23.size(); ++c) cnt += admissible(FamilyId::T32_1, f23, c);
  CHECK(cnt == 3);
  // T34: c with c^(q-1) of order 3; 14 values at (3,2).
  Field f32(3, 2);
  cnt = 0;
  for (Elem c = 1; c < f32.size(); ++c) cnt += admissible(FamilyId::T34, f32, c);
  CHECK(cnt == 14);
  // T42_1 excludes c = 1.
  Field f33(3, 3);
  CHECK(!admissible(FamilyId::T42_1, f33, 1));
  int n42 = 0;
  for (Elem c = 2; c < f33.size(); ++c) n42 += admissible(FamilyId::T42_1, f33, c);
  CHECK(n42 == 6);  // GF(8) \ {0,1}
}

TEST_CASE("build rejects hypothesis violations with the family named") {
  Field f32(3, 2);
  try {
    build({FamilyId::T35, &f32, 1});
    FAIL("expected a shape violation");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("T35") != std::string::npos);
  }
  Field f33(3, 3);
  try {
    build({FamilyId::T42_1, &f33, 1});
    FAIL("expected a c-condition violation");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("hypothesis") != std::string::npos);
  }
}

TEST_CASE("verify_family frozen examples") {
  const auto r1 = verify_family(FamilyId::T32_1, Field(2, 3));
  CHECK(r1.admissible_c.size() == 3);
  CHECK(r1.passed());
  const auto r2 = verify_family(FamilyId::T34, Field(3, 2));
  CHECK(r2.admissible_c.size() == 14);
  CHECK(r2.passed());
  const auto r3 = verify_family(FamilyId::T33_1, Field(3, 3));
  CHECK(r3.admissible_c.size() == 7);
  CHECK(r3.passed());
}

TEST_CASE("soundness sweep, k*l <= 8") {
  for (int k = 1; k <= 8; ++k) {
    for (int l = 1; k * l <= 8; ++l) {
      std::optional<Field> f;
      for (FamilyId id : kAllFamilies) {
        if (!family_shape_ok(id, k, l)) continue;
        if (!f) f.emplace(k, l);
        const auto rep = verify_family(id, *f);
        INFO(family_name(id) << " at (" << k << "," << l << ")");
        // GF(2)\{0,1} is empty, so k = 1 leaves some families vacuous.
        if (k > 1) CHECK(!rep.admissible_c.empty());
        CHECK(rep.passed());
      }
    }
  }
}
