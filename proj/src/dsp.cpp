#include "dsp.hpp"

#include <cmath>

#include "errors.hpp"

namespace adcsim {

bool is_power_of_two(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    if (!is_power_of_two(n)) throw PreconditionError("FFT length must be a power of two");

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<double> power_spectrum(const std::vector<double>& x) {
    std::vector<std::complex<double>> buf(x.begin(), x.end());
    fft_radix2(buf);
    const size_t half = x.size() / 2;
    std::vector<double> p(half + 1);
    for (size_t k = 0; k <= half; ++k) p[k] = std::norm(buf[k]);
    return p;
}

} // namespace adcsim
