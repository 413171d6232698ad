// Arbitrary-length DFT via Bluestein's chirp-z embedding in a power-of-two
// transform. Used by the spectral test, whose n = 10^6 is not a power of two.

#ifndef BDPRNG_STS_FFT_HPP
#define BDPRNG_STS_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace bdprng::sts {

// In-place iterative radix-2 FFT; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

// Reusable plan for length-n forward DFTs (any n >= 1).
class BluesteinFft {
public:
    explicit BluesteinFft(std::size_t n);

    std::size_t size() const { return n_; }
    std::vector<std::complex<double>> transform(const std::vector<double>& input) const;

private:
    std::size_t n_;
    std::size_t m_;                                // power of two >= 2n-1
    std::vector<std::complex<double>> chirp_;      // exp(-i*pi*k^2/n)
    std::vector<std::complex<double>> filter_fft_; // FFT of the chirp filter
};

}  // namespace bdprng::sts

#endif
