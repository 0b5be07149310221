#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>

#include "t21/codes.hpp"
#include "t21/families.hpp"

using namespace t21;

namespace {

MappingSpec theorem51_spec(const Field& f) {
  // Theorem 5.1 input: the T32_1 family member with the first admissible c.
  for (Elem c = 1; c < f.size(); ++c)
    if (admissible(FamilyId::T32_1, f, c)) return build({FamilyId::T32_1, &f, c});
  throw std::logic_error("no admissible c");
}

}  // namespace

TEST_CASE("trace mask table") {
  Field f(2, 2);
  const auto M = trace_mask_table(f);
  for (Elem a = 0; a < f.size(); ++a)
    for (Elem y = 0; y < f.size(); ++y)
      CHECK((std::popcount(M[a] & y) & 1) == f.trace_abs(f.mul(a, y)));
}

TEST_CASE("Walsh spectrum of the Theorem 5.1 mapping at (2,3)") {
  Field f(2, 3);
  const auto sp = walsh_spectrum(theorem51_spec(f), 2);
  sp.validate();
  REQUIRE(sp.counts.size() == 4);
  CHECK(sp.counts.at(64) == 16);
  CHECK(sp.counts.at(0) == 3312);
  CHECK(sp.counts.at(16) == 480);
  CHECK(sp.counts.at(-16) == 288);
}

TEST_CASE("fast spectrum equals the naive oracle, n = 4 exhaustive") {
  Field f(2, 2);
  const auto s = make_spec(f, 1, 1, {5, 3});
  const auto table = value_table(s);
  const auto sp = walsh_spectrum(f, table, 1);
  std::map<std::int64_t, std::uint64_t> want;
  for (Elem b = 0; b < f.size(); ++b) {
    const auto row = walsh_row(f, table, b);
    for (Elem a = 0; a < f.size(); ++a) {
      CHECK(row[a] == walsh_naive(f, table, a, b));
      ++want[row[a]];
    }
  }
  CHECK(sp.counts == want);
  CHECK(sp.counts.at(1 << f.n()) >= 1);  // W(0,0) = 2^n
}

TEST_CASE("fast spectrum vs naive, n = 6 sampled") {
  Field f(2, 3);
  const auto s = theorem51_spec(f);
  const auto table = value_table(s);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<Elem> dist(0, f.order());
  for (int i = 0; i < 60; ++i) {
    const Elem a = dist(rng), b = dist(rng);
    CHECK(walsh_row(f, table, b)[a] == walsh_naive(f, table, a, b));
  }
}

TEST_CASE("quadratic_rank_walsh matches the transform everywhere at (2,3)") {
  Field f(2, 3);
  const auto s = theorem51_spec(f);
  const auto table = value_table(s);
  for (Elem b = 0; b < f.size(); ++b) {
    const auto row = walsh_row(f, table, b);
    for (Elem a = 0; a < f.size(); ++a)
      CHECK(quadratic_rank_walsh(s, a, b) == row[a]);
  }
  // Exponent 7 has 2-weight 3: not a quadratic form.
  CHECK_THROWS_AS(quadratic_rank_walsh(make_spec(f, 1, 1, {7}), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("build_code for Theorem 5.1 at (2,3)") {
  Field f(2, 3);
  const auto s = theorem51_spec(f);
  const auto rep = build_code(s, 2);
  CHECK(rep.length == 63);
  CHECK(rep.d_K == 4);
  CHECK(rep.dimension == 8);
  CHECK(rep.self_orthogonal);
  CHECK(rep.weights_div_4);
  CHECK(rep.minimal);
  CHECK(rep.minimal_method == "sufficient-condition");
  const std::map<std::uint32_t, std::uint64_t> want{
      {0, 1}, {24, 30}, {32, 207}, {40, 18}};
  CHECK(rep.weight_distribution == want);
  CHECK(rep.weight_distribution == predicted_distribution(Theorem::T51, 2, 3));
  const auto json = code_report_to_json(rep);
  CHECK(json.find("\"dimension\": 8") != std::string::npos);

  // Cross-check by enumerating the code from its generators.
  const auto words = span_codewords(generator_rows(s), rep.length);
  CHECK(words.size() == (std::size_t{1} << rep.dimension));
  std::map<std::uint32_t, std::uint64_t> enumerated;
  for (const Word& w : words) ++enumerated[word_weight(w)];
  CHECK(enumerated == want);
  CHECK(is_minimal(words, true).minimal);
  CHECK(is_minimal(words, true).method == "exhaustive");
}

TEST_CASE("predicted distributions, frozen") {
  // Note the 240/272 multiplicities: the first power moment pins the
  // low-weight count at the larger value (952 = 840 + 7168/2^6).
  const std::map<std::uint32_t, std::uint64_t> t52{
      {0, 1}, {240, 952}, {256, 2303}, {272, 840}};
  CHECK(predicted_distribution(Theorem::T52, 3, 3) == t52);
  const std::map<std::uint32_t, std::uint64_t> t53{
      {0, 1}, {24, 70}, {32, 399}, {40, 42}};
  CHECK(predicted_distribution(Theorem::T53, 3, 2) == t53);
  std::uint64_t total = 0;
  for (const auto& [w, m] : predicted_distribution(Theorem::T51, 2, 5))
    total += m;
  CHECK(total == std::uint64_t{1} << 12);  // 2^{n+k}, n=10, k=2
  CHECK_THROWS(predicted_distribution(Theorem::T51, 2, 2));  // l even
  CHECK_THROWS(predicted_distribution(Theorem::T52, 2, 3));  // k even
  CHECK_THROWS(predicted_distribution(Theorem::T53, 3, 3));  // l != 2
}

TEST_CASE("solve_frequency_system") {
  const auto x = solve_frequency_system(6, 4, {0, 16, -16});
  CHECK(x[0] == 3312);
  CHECK(x[1] == 480);
  CHECK(x[2] == 288);
  CHECK_THROWS(solve_frequency_system(6, 4, {0, 16, 16}));  // repeated value
  CHECK_THROWS(solve_frequency_system(6, 4, {0, 16, 64}));  // contains 2^n
}

TEST_CASE("is_self_orthogonal on tiny hand codes") {
  // Full space GF(2)^3: weight-1 generators are not self-orthogonal.
  CHECK(!is_self_orthogonal({{0b001}, {0b010}, {0b100}}).self_orthogonal);
  // Repetition code {000, 111}: <111,111> = 1.
  CHECK(!is_self_orthogonal({{0b111}}).self_orthogonal);
  // A single weight-4 row is orthogonal to itself.
  const auto r = is_self_orthogonal({{0b1111}});
  CHECK(r.self_orthogonal);
  CHECK(r.weights_div_4);
}

TEST_CASE("is_minimal on tiny hand codes") {
  // Equal-weight nonzero words can never cover each other.
  CHECK(is_minimal({{0b000}, {0b011}, {0b101}, {0b110}}).minimal);
  // support(010) is inside support(110).
  const auto r = is_minimal({{0b000}, {0b010}, {0b110}, {0b100}}, true);
  CHECK(!r.minimal);
  CHECK(r.method == "exhaustive");
}

TEST_CASE("spectrum validation rejects corrupted tables") {
  Field f(2, 2);
  auto table = value_table(make_spec(f, 1, 1, {3}));
  std::vector<Elem> bad = table;
  bad[0] = 1;  // f(0) != 0
  CHECK_THROWS(walsh_spectrum(f, bad, 1));
}
