#pragma once

#include <complex>
#include <vector>

namespace rajchman {

// In-place iterative radix-2 FFT. sign = -1 gives the forward transform
// sum_j x[j] e^{-2*pi*i*j*k/N}, sign = +1 the unnormalised inverse.
// N must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& x, int sign);

bool is_power_of_two(long n);

}  // namespace rajchman
