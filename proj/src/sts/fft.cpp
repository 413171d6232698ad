#include "bdprng/sts/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bdprng::sts {

void fft_pow2(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::invalid_argument("fft_pow2: size must be a power of two");

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle =
            (inverse ? 2.0 : -2.0) * std::numbers::pi / double(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = data[i + k];
                const std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& x : data) x /= double(n);
}

BluesteinFft::BluesteinFft(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("BluesteinFft: empty transform");
    m_ = std::bit_ceil(2 * n - 1);
    chirp_.resize(n);
    // k^2 reduced mod 2n keeps the phase argument small and exact.
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t k2 =
            std::size_t((unsigned __int128)(k)*k % (2 * n));
        const double angle = -std::numbers::pi * double(k2) / double(n);
        chirp_[k] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> filter(m_, {0.0, 0.0});
    filter[0] = std::conj(chirp_[0]);
    for (std::size_t k = 1; k < n; ++k)
        filter[k] = filter[m_ - k] = std::conj(chirp_[k]);
    fft_pow2(filter, false);
    filter_fft_ = std::move(filter);
}

std::vector<std::complex<double>> BluesteinFft::transform(
    const std::vector<double>& input) const {
    if (input.size() != n_)
        throw std::invalid_argument("BluesteinFft: input length mismatch");
    std::vector<std::complex<double>> work(m_, {0.0, 0.0});
    for (std::size_t k = 0; k < n_; ++k) work[k] = input[k] * chirp_[k];
    fft_pow2(work, false);
    for (std::size_t k = 0; k < m_; ++k) work[k] *= filter_fft_[k];
    fft_pow2(work, true);
    std::vector<std::complex<double>> out(n_);
    for (std::size_t k = 0; k < n_; ++k) out[k] = work[k] * chirp_[k];
    return out;
}

}  // namespace bdprng::sts
