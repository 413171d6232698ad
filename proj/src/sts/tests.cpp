#include "bdprng/sts/tests.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "bdprng/sts/berlekamp_massey.hpp"
#include "bdprng/sts/fft.hpp"
#include "bdprng/sts/special.hpp"

namespace bdprng::sts {

namespace {

TestResult not_applicable(std::string family, std::string reason) {
    TestResult r;
    r.family = std::move(family);
    r.applicable = false;
    r.reason = std::move(reason);
    return r;
}

// Guard against float noise pushing a p-value epsilon outside [0, 1].
double clip01(double p) { return std::min(1.0, std::max(0.0, p)); }

TestResult single(std::string family, double p, std::string params = "") {
    TestResult r;
    r.family = family;
    r.subtest_ids = {family};
    r.p_values = {clip01(p)};
    r.parameters = std::move(params);
    return r;
}

}  // namespace

std::size_t TestResult::passed_count(double alpha) const {
    std::size_t c = 0;
    for (double p : p_values)
        if (p >= alpha) ++c;
    return c;
}

// ---------------------------------------------------------------- frequency

TestResult frequency_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    if (n < 10) return not_applicable("frequency", "too-short input");
    const double s = 2.0 * double(bits.count_ones()) - double(n);
    const double s_obs = std::fabs(s) / std::sqrt(double(n));
    return single("frequency", std::erfc(s_obs / std::sqrt(2.0)));
}

// ---------------------------------------------------------- block frequency

TestResult block_frequency_test(const BitStream& bits, std::size_t block_len) {
    const std::size_t n = bits.size();
    if (block_len == 0 || n < block_len)
        return not_applicable("block-frequency", "sequence shorter than one block");
    const std::size_t num_blocks = n / block_len;
    double chi2 = 0.0;
    for (std::size_t b = 0; b < num_blocks; ++b) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < block_len; ++i)
            ones += bits.bit(b * block_len + i);
        const double pi = double(ones) / double(block_len);
        chi2 += (pi - 0.5) * (pi - 0.5);
    }
    chi2 *= 4.0 * double(block_len);
    return single("block-frequency", igamc(double(num_blocks) / 2.0, chi2 / 2.0),
                  "M=" + std::to_string(block_len));
}

// ----------------------------------------------------------- cumulative sums

namespace {

double cusum_p_value(std::size_t n, long z) {
    const double sn = std::sqrt(double(n));
    const double zd = double(z);
    double sum1 = 0.0;
    for (long k = (long)std::floor((-double(n) / zd + 1.0) / 4.0);
         k <= (long)std::floor((double(n) / zd - 1.0) / 4.0); ++k)
        sum1 += normal_cdf((4.0 * k + 1.0) * zd / sn) -
                normal_cdf((4.0 * k - 1.0) * zd / sn);
    double sum2 = 0.0;
    for (long k = (long)std::floor((-double(n) / zd - 3.0) / 4.0);
         k <= (long)std::floor((double(n) / zd - 1.0) / 4.0); ++k)
        sum2 += normal_cdf((4.0 * k + 3.0) * zd / sn) -
                normal_cdf((4.0 * k + 1.0) * zd / sn);
    return 1.0 - sum1 + sum2;
}

}  // namespace

TestResult cumulative_sums_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    if (n < 10) return not_applicable("cumulative-sums", "too-short input");
    long s = 0, max_fwd = 0, max_bwd = 0;
    for (std::size_t i = 0; i < n; ++i) {
        s += bits.bit(i) ? 1 : -1;
        max_fwd = std::max(max_fwd, std::labs(s));
    }
    s = 0;
    for (std::size_t i = n; i-- > 0;) {
        s += bits.bit(i) ? 1 : -1;
        max_bwd = std::max(max_bwd, std::labs(s));
    }
    TestResult r;
    r.family = "cumulative-sums";
    r.subtest_ids = {"cusum-forward", "cusum-backward"};
    r.p_values = {clip01(cusum_p_value(n, max_fwd)),
                  clip01(cusum_p_value(n, max_bwd))};
    return r;
}

// ----------------------------------------------------------------------- runs

TestResult runs_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    if (n < 10) return not_applicable("runs", "too-short input");
    const double pi = double(bits.count_ones()) / double(n);
    if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(double(n)))
        return not_applicable("runs", "frequency precondition failed");
    std::size_t v = 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (bits.bit(i) != bits.bit(i + 1)) ++v;
    const double num = std::fabs(double(v) - 2.0 * double(n) * pi * (1.0 - pi));
    const double den = 2.0 * std::sqrt(2.0 * double(n)) * pi * (1.0 - pi);
    return single("runs", std::erfc(num / den));
}

// -------------------------------------------------------------- longest run

TestResult longest_run_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    std::size_t block_len;
    std::vector<double> pi;
    std::size_t v_min;
    if (n < 128) return not_applicable("longest-run", "need at least 128 bits");
    if (n < 6272) {
        block_len = 8;
        v_min = 1;
        pi = {0.2148, 0.3672, 0.2305, 0.1875};
    } else if (n < 750000) {
        block_len = 128;
        v_min = 4;
        pi = {0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124};
    } else {
        block_len = 10000;
        v_min = 10;
        pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
    }
    const std::size_t k = pi.size() - 1;
    const std::size_t num_blocks = n / block_len;
    std::vector<std::size_t> counts(pi.size(), 0);
    for (std::size_t b = 0; b < num_blocks; ++b) {
        std::size_t longest = 0, run = 0;
        for (std::size_t i = 0; i < block_len; ++i) {
            run = bits.bit(b * block_len + i) ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        const std::size_t cls =
            longest <= v_min ? 0 : std::min(longest - v_min, k);
        ++counts[cls];
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
        const double expected = double(num_blocks) * pi[i];
        chi2 += (double(counts[i]) - expected) * (double(counts[i]) - expected) /
                expected;
    }
    return single("longest-run", igamc(double(k) / 2.0, chi2 / 2.0),
                  "M=" + std::to_string(block_len));
}

// ---------------------------------------------------------------------- rank

namespace {

int rank32(std::array<std::uint32_t, 32>& rows) {
    int rank = 0;
    for (int col = 31; col >= 0 && rank < 32; --col) {
        const std::uint32_t mask = 1u << col;
        int pivot = -1;
        for (int r = rank; r < 32; ++r)
            if (rows[std::size_t(r)] & mask) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(rows[std::size_t(pivot)], rows[std::size_t(rank)]);
        for (int r = 0; r < 32; ++r)
            if (r != rank && (rows[std::size_t(r)] & mask))
                rows[std::size_t(r)] ^= rows[std::size_t(rank)];
        ++rank;
    }
    return rank;
}

// Probability that a random MxM GF(2) matrix has rank M - d.
double rank_probability(int m, int d) {
    const int r = m - d;
    double log2p = double(r) * double(2 * m - r) - double(m) * m;
    double prod = 1.0;
    for (int i = 0; i < r; ++i) {
        const double a = 1.0 - std::ldexp(1.0, i - m);
        const double c = 1.0 - std::ldexp(1.0, i - r);
        prod *= a * a / c;
    }
    return std::ldexp(prod, int(log2p));
}

}  // namespace

TestResult rank_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    const std::size_t matrix_bits = 32 * 32;
    const std::size_t num_matrices = n / matrix_bits;
    if (num_matrices < 38)
        return not_applicable("rank", "need at least 38 32x32 matrices");
    std::size_t f_full = 0, f_minus1 = 0;
    std::size_t pos = 0;
    for (std::size_t mtx = 0; mtx < num_matrices; ++mtx) {
        std::array<std::uint32_t, 32> rows{};
        for (auto& row : rows)
            for (int c = 0; c < 32; ++c)
                row = (row << 1) | std::uint32_t(bits.bit(pos++));
        const int r = rank32(rows);
        if (r == 32) ++f_full;
        else if (r == 31) ++f_minus1;
    }
    const double p32 = rank_probability(32, 0);
    const double p31 = rank_probability(32, 1);
    const double prest = 1.0 - p32 - p31;
    const double nm = double(num_matrices);
    const std::size_t f_rest = num_matrices - f_full - f_minus1;
    double chi2 = (f_full - nm * p32) * (f_full - nm * p32) / (nm * p32) +
                  (f_minus1 - nm * p31) * (f_minus1 - nm * p31) / (nm * p31) +
                  (f_rest - nm * prest) * (f_rest - nm * prest) / (nm * prest);
    return single("rank", std::exp(-chi2 / 2.0), "M=Q=32");
}

// ----------------------------------------------------------------- spectral

TestResult dft_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    if (n < 10) return not_applicable("dft", "too-short input");
    static thread_local std::unique_ptr<BluesteinFft> plan;
    if (!plan || plan->size() != n) plan = std::make_unique<BluesteinFft>(n);
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = bits.bit(i) ? 1.0 : -1.0;
    const auto spectrum = plan->transform(x);
    const double threshold = std::sqrt(std::log(1.0 / 0.05) * double(n));
    const std::size_t half = n / 2;
    std::size_t below = 0;
    for (std::size_t k = 0; k < half; ++k)
        if (std::abs(spectrum[k]) < threshold) ++below;
    const double n0 = 0.95 * double(n) / 2.0;
    const double d =
        (double(below) - n0) / std::sqrt(double(n) * 0.95 * 0.05 / 4.0);
    return single("dft", std::erfc(std::fabs(d) / std::sqrt(2.0)));
}

// --------------------------------------------------- non-overlapping templates

std::vector<std::vector<std::uint8_t>> aperiodic_templates(std::size_t m) {
    if (m == 0 || m > 16) throw std::invalid_argument("template length out of range");
    std::vector<std::vector<std::uint8_t>> out;
    for (std::uint32_t value = 0; value < (1u << m); ++value) {
        bool bordered = false;
        // Bordered = some proper prefix equals the same-length suffix; such a
        // template can overlap a shifted copy of itself.
        for (std::size_t s = 1; s < m && !bordered; ++s) {
            const std::uint32_t prefix = value >> s;
            const std::uint32_t suffix = value & ((1u << (m - s)) - 1);
            if (prefix == suffix) bordered = true;
        }
        if (bordered) continue;
        std::vector<std::uint8_t> t(m);
        for (std::size_t i = 0; i < m; ++i)
            t[i] = std::uint8_t((value >> (m - 1 - i)) & 1);
        out.push_back(std::move(t));
    }
    return out;
}

TestResult non_overlapping_template_test(const BitStream& bits,
                                         std::size_t template_len,
                                         std::size_t num_blocks) {
    const std::size_t n = bits.size();
    const std::size_t block_len = n / num_blocks;
    if (block_len < 2 * template_len)
        return not_applicable("non-overlapping-template", "blocks too short");
    const double mu =
        double(block_len - template_len + 1) / std::ldexp(1.0, int(template_len));
    const double sigma2 =
        double(block_len) *
        (std::ldexp(1.0, -int(template_len)) -
         double(2 * template_len - 1) * std::ldexp(1.0, -2 * int(template_len)));

    // One pass: bucket window positions by their template-length bit value.
    const std::uint32_t mask = (1u << template_len) - 1;
    std::vector<std::vector<std::uint32_t>> positions(mask + 1);
    for (std::size_t b = 0; b < num_blocks; ++b) {
        const std::size_t base = b * block_len;
        std::uint32_t window = 0;
        for (std::size_t i = 0; i < block_len; ++i) {
            window = ((window << 1) | std::uint32_t(bits.bit(base + i))) & mask;
            if (i + 1 >= template_len)
                positions[window].push_back(std::uint32_t(base + i + 1 - template_len));
        }
    }

    const auto templates = aperiodic_templates(template_len);
    TestResult r;
    r.family = "non-overlapping-template";
    r.parameters = "m=" + std::to_string(template_len) +
                   ",N=" + std::to_string(num_blocks);
    for (const auto& tpl : templates) {
        std::uint32_t value = 0;
        std::string id = "nonoverlap-";
        for (std::uint8_t bit : tpl) {
            value = (value << 1) | bit;
            id += char('0' + bit);
        }
        std::vector<std::size_t> counts(num_blocks, 0);
        std::size_t next_allowed = 0;
        std::size_t block = 0;
        std::size_t block_end = block_len;
        for (std::uint32_t pos : positions[value]) {
            while (pos >= block_end) {
                ++block;
                block_end += block_len;
                next_allowed = 0;
            }
            if (pos >= next_allowed) {
                ++counts[block];
                next_allowed = pos + template_len;
            }
        }
        double chi2 = 0.0;
        for (std::size_t c : counts) chi2 += (double(c) - mu) * (double(c) - mu);
        chi2 /= sigma2;
        r.subtest_ids.push_back(id);
        r.p_values.push_back(clip01(igamc(double(num_blocks) / 2.0, chi2 / 2.0)));
    }
    return r;
}

// ------------------------------------------------------- overlapping template

TestResult overlapping_template_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    constexpr std::size_t m = 9;
    constexpr std::size_t block_len = 1032;
    const std::size_t num_blocks = n / block_len;
    if (num_blocks < 50)
        return not_applicable("overlapping-template", "need at least 50 blocks");
    // Category probabilities for m=9, M=1032 (SP 800-22 rev. 1a values).
    static const std::array<double, 6> pi = {0.364091, 0.185659, 0.139381,
                                             0.100571, 0.070432, 0.139865};
    std::array<std::size_t, 6> counts{};
    for (std::size_t b = 0; b < num_blocks; ++b) {
        const std::size_t base = b * block_len;
        std::size_t matches = 0, run = 0;
        for (std::size_t i = 0; i < block_len; ++i) {
            run = bits.bit(base + i) ? run + 1 : 0;
            if (run >= m) ++matches;
        }
        ++counts[std::min(matches, std::size_t{5})];
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        const double expected = double(num_blocks) * pi[i];
        chi2 += (double(counts[i]) - expected) * (double(counts[i]) - expected) /
                expected;
    }
    return single("overlapping-template", igamc(5.0 / 2.0, chi2 / 2.0),
                  "m=9,M=1032");
}

// ------------------------------------------------------------------ universal

TestResult universal_test(const BitStream& bits) {
    const std::size_t n = bits.size();
    static const std::array<std::size_t, 11> min_n = {
        387840,    904960,    2068480,   4654080,   10342400,  22753280,
        49643520,  105152512, 221102080, 462422016, 965615616};
    static const std::array<double, 11> expected = {
        5.2177052, 6.1962507, 7.1836656, 8.1764248, 9.1723243, 10.170032,
        11.168765, 12.168070, 13.167693, 14.167488, 15.167379};
    static const std::array<double, 11> variance = {
        2.954, 3.125, 3.238, 3.311, 3.356, 3.384, 3.401, 3.410, 3.416, 3.419,
        3.421};
    if (n < min_n[0])
        return not_applicable("universal", "need at least 387840 bits");
    std::size_t idx = 0;
    while (idx + 1 < min_n.size() && n >= min_n[idx + 1]) ++idx;
    const std::size_t L = idx + 6;
    const std::size_t Q = 10u << L;
    const std::size_t K = n / L - Q;

    std::vector<std::size_t> last(std::size_t{1} << L, 0);
    std::size_t pos = 0;
    auto read_block = [&] {
        std::size_t v = 0;
        for (std::size_t i = 0; i < L; ++i) v = (v << 1) | bits.bit(pos++);
        return v;
    };
    for (std::size_t i = 1; i <= Q; ++i) last[read_block()] = i;
    double sum = 0.0;
    for (std::size_t i = Q + 1; i <= Q + K; ++i) {
        const std::size_t v = read_block();
        sum += std::log2(double(i - last[v]));
        last[v] = i;
    }
    const double fn = sum / double(K);
    const double c = 0.7 - 0.8 / double(L) +
                     (4.0 + 32.0 / double(L)) *
                         std::pow(double(K), -3.0 / double(L)) / 15.0;
    const double sigma = c * std::sqrt(variance[idx] / double(K));
    const double p =
        std::erfc(std::fabs(fn - expected[idx]) / (std::sqrt(2.0) * sigma));
    return single("universal", p,
                  "L=" + std::to_string(L) + ",Q=" + std::to_string(Q));
}

// -------------------------------------------------------- approximate entropy

namespace {

// phi_m over overlapping m-bit windows with cyclic wraparound.
double apen_phi(const BitStream& bits, std::size_t m) {
    if (m == 0) return 0.0;
    const std::size_t n = bits.size();
    std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
    const std::uint32_t mask = (1u << m) - 1;
    std::uint32_t window = 0;
    for (std::size_t i = 0; i < n + m - 1; ++i) {
        window = ((window << 1) | std::uint32_t(bits.bit(i % n))) & mask;
        if (i + 1 >= m) ++counts[window];
    }
    double phi = 0.0;
    for (std::uint32_t c : counts)
        if (c != 0) {
            const double frac = double(c) / double(n);
            phi += frac * std::log(frac);
        }
    return phi;
}

}  // namespace

TestResult approximate_entropy_test(const BitStream& bits, std::size_t m) {
    const std::size_t n = bits.size();
    if (m + 2 > n)
        return not_applicable("approximate-entropy", "m too large for n");
    const double apen = apen_phi(bits, m) - apen_phi(bits, m + 1);
    const double chi2 =
        std::max(0.0, 2.0 * double(n) * (std::log(2.0) - apen));
    return single("approximate-entropy",
                  igamc(std::ldexp(1.0, int(m) - 1), chi2 / 2.0),
                  "m=" + std::to_string(m));
}

// -------------------------------------------------------------------- serial

namespace {

double serial_psi2(const BitStream& bits, std::size_t m) {
    if (m == 0) return 0.0;
    const std::size_t n = bits.size();
    std::vector<std::uint32_t> counts(std::size_t{1} << m, 0);
    const std::uint32_t mask = std::uint32_t((std::uint64_t{1} << m) - 1);
    std::uint32_t window = 0;
    for (std::size_t i = 0; i < n + m - 1; ++i) {
        window = ((window << 1) | std::uint32_t(bits.bit(i % n))) & mask;
        if (i + 1 >= m) ++counts[window];
    }
    double sum_sq = 0.0;
    for (std::uint32_t c : counts) sum_sq += double(c) * double(c);
    return std::ldexp(1.0, int(m)) / double(n) * sum_sq - double(n);
}

}  // namespace

TestResult serial_test(const BitStream& bits, std::size_t m) {
    const std::size_t n = bits.size();
    if (m < 3 || n < (std::size_t{1} << m))
        return not_applicable("serial", "m too large for n");
    const double psi_m = serial_psi2(bits, m);
    const double psi_m1 = serial_psi2(bits, m - 1);
    const double psi_m2 = serial_psi2(bits, m - 2);
    const double d1 = std::max(0.0, psi_m - psi_m1);
    const double d2 = std::max(0.0, psi_m - 2.0 * psi_m1 + psi_m2);
    TestResult r;
    r.family = "serial";
    r.parameters = "m=" + std::to_string(m);
    r.subtest_ids = {"serial-1", "serial-2"};
    r.p_values = {clip01(igamc(std::ldexp(1.0, int(m) - 2), d1 / 2.0)),
                  clip01(igamc(std::ldexp(1.0, int(m) - 3), d2 / 2.0))};
    return r;
}

// --------------------------------------------------------- linear complexity

TestResult linear_complexity_test(const BitStream& bits, std::size_t block_len) {
    const std::size_t n = bits.size();
    const std::size_t num_blocks = n / block_len;
    if (block_len < 500 || block_len > 5000 || num_blocks < 200)
        return not_applicable("linear-complexity",
                              "need M in [500,5000] and at least 200 blocks");
    static const std::array<double, 7> pi = {0.010417, 0.03125, 0.125, 0.5,
                                             0.25,     0.0625,  0.020833};
    const double M = double(block_len);
    const double sign = (block_len % 2 == 0) ? 1.0 : -1.0;
    const double mean = M / 2.0 + (9.0 - sign) / 36.0 -
                        (M / 3.0 + 2.0 / 9.0) / std::pow(2.0, M);
    std::array<std::size_t, 7> counts{};
    std::vector<std::uint8_t> block(block_len);
    for (std::size_t b = 0; b < num_blocks; ++b) {
        for (std::size_t i = 0; i < block_len; ++i)
            block[i] = std::uint8_t(bits.bit(b * block_len + i));
        const double L = double(berlekamp_massey(block));
        const double t = sign * (L - mean) + 2.0 / 9.0;
        int cls;
        if (t <= -2.5) cls = 0;
        else if (t <= -1.5) cls = 1;
        else if (t <= -0.5) cls = 2;
        else if (t <= 0.5) cls = 3;
        else if (t <= 1.5) cls = 4;
        else if (t <= 2.5) cls = 5;
        else cls = 6;
        ++counts[std::size_t(cls)];
    }
    double chi2 = 0.0;
    for (std::size_t i = 0; i < 7; ++i) {
        const double expected = double(num_blocks) * pi[i];
        chi2 += (double(counts[i]) - expected) * (double(counts[i]) - expected) /
                expected;
    }
    return single("linear-complexity", igamc(3.0, chi2 / 2.0),
                  "M=" + std::to_string(block_len));
}

// ---------------------------------------------------------- random excursions

namespace {

struct WalkCycles {
    std::size_t cycles = 0;
    // visit_counts[state+9][k] = number of cycles visiting `state` exactly k
    // times (k capped); plus raw total visits per state for the variant test.
    std::array<std::array<std::size_t, 6>, 19> category_counts{};
    std::array<std::size_t, 19> total_visits{};
};

WalkCycles walk_cycles(const BitStream& bits) {
    WalkCycles w{};
    std::array<std::size_t, 19> in_cycle{};
    long s = 0;
    auto close_cycle = [&] {
        ++w.cycles;
        for (int st = -9; st <= 9; ++st) {
            if (st == 0) continue;
            const std::size_t idx = std::size_t(st + 9);
            w.category_counts[idx][std::min(in_cycle[idx], std::size_t{5})]++;
            in_cycle[idx] = 0;
        }
    };
    for (std::size_t i = 0; i < bits.size(); ++i) {
        s += bits.bit(i) ? 1 : -1;
        if (s == 0) {
            close_cycle();
        } else if (s >= -9 && s <= 9) {
            ++in_cycle[std::size_t(s + 9)];
            ++w.total_visits[std::size_t(s + 9)];
        }
    }
    if (s != 0) close_cycle();  // final partial cycle
    return w;
}

double excursion_pi(int x, std::size_t k) {
    const double ax = std::fabs(double(x));
    const double q = 1.0 - 1.0 / (2.0 * ax);
    if (k == 0) return q;
    if (k >= 5) return std::pow(q, 4.0) / (2.0 * ax);
    return std::pow(q, double(k) - 1.0) / (4.0 * ax * ax);
}

}  // namespace

TestResult random_excursions_test(const BitStream& bits) {
    const WalkCycles w = walk_cycles(bits);
    if (w.cycles < 500)
        return not_applicable("random-excursions",
                              "fewer than 500 zero-crossing cycles");
    TestResult r;
    r.family = "random-excursions";
    for (int x : {-4, -3, -2, -1, 1, 2, 3, 4}) {
        const auto& cats = w.category_counts[std::size_t(x + 9)];
        double chi2 = 0.0;
        for (std::size_t k = 0; k < 6; ++k) {
            const double expected = double(w.cycles) * excursion_pi(x, k);
            chi2 += (double(cats[k]) - expected) * (double(cats[k]) - expected) /
                    expected;
        }
        r.subtest_ids.push_back("excursions-" + std::to_string(x));
        r.p_values.push_back(clip01(igamc(5.0 / 2.0, chi2 / 2.0)));
    }
    return r;
}

TestResult random_excursions_variant_test(const BitStream& bits) {
    const WalkCycles w = walk_cycles(bits);
    if (w.cycles < 500)
        return not_applicable("random-excursions-variant",
                              "fewer than 500 zero-crossing cycles");
    TestResult r;
    r.family = "random-excursions-variant";
    const double j = double(w.cycles);
    for (int x = -9; x <= 9; ++x) {
        if (x == 0) continue;
        const double visits = double(w.total_visits[std::size_t(x + 9)]);
        const double denom = std::sqrt(2.0 * j * (4.0 * std::fabs(double(x)) - 2.0));
        r.subtest_ids.push_back("excursions-variant-" + std::to_string(x));
        r.p_values.push_back(clip01(std::erfc(std::fabs(visits - j) / denom)));
    }
    return r;
}

// ------------------------------------------------------------------ registry

const std::vector<std::string>& test_registry() {
    static const std::vector<std::string> names = {
        "frequency",
        "block-frequency",
        "cumulative-sums",
        "runs",
        "longest-run",
        "rank",
        "dft",
        "non-overlapping-template",
        "overlapping-template",
        "universal",
        "approximate-entropy",
        "serial",
        "linear-complexity",
        "random-excursions",
        "random-excursions-variant",
    };
    return names;
}

TestResult run_test(const std::string& family, const BitStream& bits) {
    if (family == "frequency") return frequency_test(bits);
    if (family == "block-frequency") return block_frequency_test(bits);
    if (family == "cumulative-sums") return cumulative_sums_test(bits);
    if (family == "runs") return runs_test(bits);
    if (family == "longest-run") return longest_run_test(bits);
    if (family == "rank") return rank_test(bits);
    if (family == "dft") return dft_test(bits);
    if (family == "non-overlapping-template")
        return non_overlapping_template_test(bits);
    if (family == "overlapping-template") return overlapping_template_test(bits);
    if (family == "universal") return universal_test(bits);
    if (family == "approximate-entropy") return approximate_entropy_test(bits);
    if (family == "serial") return serial_test(bits);
    if (family == "linear-complexity") return linear_complexity_test(bits);
    if (family == "random-excursions") return random_excursions_test(bits);
    if (family == "random-excursions-variant")
        return random_excursions_variant_test(bits);
    throw std::invalid_argument("unknown test family: " + family);
}

}  // namespace bdprng::sts
