#include "rajchman/fft.hpp"

#include <cmath>

#include "rajchman/errors.hpp"

namespace rajchman {

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& x, int sign) {
  const std::size_t n = x.size();
  if (!is_power_of_two(static_cast<long>(n)))
    throw spec_error("fft: length must be a power of two");
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  const double pi = std::acos(-1.0);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = x[i + j];
        const std::complex<double> v = x[i + j + len / 2] * w;
        x[i + j] = u + v;
        x[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace rajchman
