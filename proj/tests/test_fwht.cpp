#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "t21/fwht.hpp"

namespace {

// O(4^n) reference transform.
std::vector<std::int32_t> naive(const std::vector<std::int32_t>& v, int n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::int32_t> out(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::int64_t acc = 0;
    for (std::size_t x = 0; x < size; ++x)
      acc += (std::popcount(a & x) & 1) ? -v[x] : v[x];
    out[a] = static_cast<std::int32_t>(acc);
  }
  return out;
}

std::vector<std::int32_t> random_vec(int n, std::mt19937& rng) {
  std::vector<std::int32_t> v(std::size_t{1} << n);
  std::uniform_int_distribution<std::int32_t> dist(-100, 100);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("dispatch kernel name is one of the implementations") {
  const std::string name = t21::fwht_kernel_name();
  CHECK((name == "scalar" || name == "avx2"));
}

TEST_CASE("fwht matches the naive transform") {
  std::mt19937 rng(12345);
  for (int n = 0; n <= 6; ++n) {
    auto v = random_vec(n, rng);
    const auto want = naive(v, n);
    auto got = v;
    t21::fwht(got.data(), n);
    CHECK(got == want);
    got = v;
    t21::fwht_scalar(got.data(), n);
    CHECK(got == want);
  }
}

TEST_CASE("scalar and dispatched kernels agree on larger sizes") {
  std::mt19937 rng(777);
  for (int n = 7; n <= 12; ++n) {
    const auto v = random_vec(n, rng);
    auto a = v, b = v;
    t21::fwht_scalar(a.data(), n);
    t21::fwht(b.data(), n);
    CHECK(a == b);
#if defined(__x86_64__)
    if (std::string(t21::fwht_kernel_name()) == "avx2") {
      auto c = v;
      t21::fwht_avx2(c.data(), n);
      CHECK(a == c);
    }
#endif
  }
}

TEST_CASE("transform is an involution up to 2^n") {
  std::mt19937 rng(99);
  for (int n : {3, 8}) {
    const auto v = random_vec(n, rng);
    auto w = v;
    t21::fwht(w.data(), n);
    t21::fwht(w.data(), n);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(w[i] == v[i] << n);
  }
}
