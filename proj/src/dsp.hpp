#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace adcsim {

bool is_power_of_two(size_t n);

// In-place iterative radix-2 FFT with a fixed summation order, so repeated
// runs are bit-identical. Length must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

// One-sided power spectrum |X[k]|^2 for k = 0..n/2 of a real signal.
// No window, no normalization.
std::vector<double> power_spectrum(const std::vector<double>& x);

} // namespace adcsim
