#if defined(__x86_64__)

#include <immintrin.h>

#include "t21/fwht.hpp"

namespace t21 {

// Butterfly stages for h >= 8 operate on whole 8-lane vectors; the first
// three stages are done with in-register shuffles.
__attribute__((target("avx2"))) void fwht_avx2(std::int32_t* v, int n) {
  const std::size_t size = std::size_t{1} << n;
  if (size < 8) {
    fwht_scalar(v, n);
    return;
  }
  for (std::size_t i = 0; i < size; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i*>(v + i));
    // h = 1: pairs within 64-bit lanes
    __m256i sw = _mm256_shuffle_epi32(x, _MM_SHUFFLE(2, 3, 0, 1));
    __m256i neg = _mm256_set_epi32(-1, 1, -1, 1, -1, 1, -1, 1);
    x = _mm256_add_epi32(sw, _mm256_sign_epi32(x, neg));
    // h = 2: swap 64-bit halves within 128-bit lanes
    sw = _mm256_shuffle_epi32(x, _MM_SHUFFLE(1, 0, 3, 2));
    neg = _mm256_set_epi32(-1, -1, 1, 1, -1, -1, 1, 1);
    x = _mm256_add_epi32(sw, _mm256_sign_epi32(x, neg));
    // h = 4: swap 128-bit lanes
    sw = _mm256_permute2x128_si256(x, x, 0x01);
    neg = _mm256_set_epi32(-1, -1, -1, -1, 1, 1, 1, 1);
    x = _mm256_add_epi32(sw, _mm256_sign_epi32(x, neg));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + i), x);
  }
  for (std::size_t h = 8; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; j += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(v + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<__m256i*>(v + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + j),
                            _mm256_add_epi32(a, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(v + j + h),
                            _mm256_sub_epi32(a, b));
      }
    }
  }
}

}  // namespace t21

#endif  // __x86_64__
