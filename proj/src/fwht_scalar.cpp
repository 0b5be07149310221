#include "t21/fwht.hpp"

namespace t21 {

void fwht_scalar(std::int32_t* v, int n) {
  const std::size_t size = std::size_t{1} << n;
  for (std::size_t h = 1; h < size; h <<= 1) {
    for (std::size_t i = 0; i < size; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int32_t a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

}  // namespace t21
