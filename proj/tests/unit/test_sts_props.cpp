#include <doctest.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>
#include <random>

#include "bdprng/sts/berlekamp_massey.hpp"
#include "bdprng/sts/fft.hpp"
#include "bdprng/sts/suite.hpp"
#include "bdprng/sts/tests.hpp"
#include "oracles.hpp"

using namespace bdprng;

namespace {

BitStream random_stream(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitStream s(n);
    for (std::size_t i = 0; i < n; ++i) s.set_bit(i, rng() & 1);
    return s;
}

BitStream complement(const BitStream& s) {
    BitStream out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.set_bit(i, !s.bit(i));
    return out;
}

BitStream reversed(const BitStream& s) {
    BitStream out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out.set_bit(i, s.bit(s.size() - 1 - i));
    return out;
}

}  // namespace

TEST_CASE("every family yields p-values in [0,1] on varied inputs") {
    std::vector<BitStream> inputs;
    inputs.push_back(random_stream(2048, 1));
    inputs.push_back(random_stream(40000, 2));
    BitStream zeros(4096), ones(4096), alt(4096);
    for (std::size_t i = 0; i < 4096; ++i) {
        ones.set_bit(i, true);
        alt.set_bit(i, i & 1);
    }
    inputs.push_back(zeros);
    inputs.push_back(ones);
    inputs.push_back(alt);
    // biased stream: three quarters ones
    BitStream biased(8192);
    std::mt19937_64 rng(3);
    for (std::size_t i = 0; i < biased.size(); ++i)
        biased.set_bit(i, (rng() & 3) != 0);
    inputs.push_back(biased);

    for (const BitStream& s : inputs) {
        for (const std::string& fam : sts::test_registry()) {
            const sts::TestResult r = sts::run_test(fam, s);
            if (!r.applicable) {
                CHECK(!r.reason.empty());
                continue;
            }
            CHECK(r.subtest_ids.size() == r.p_values.size());
            for (double p : r.p_values) {
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                CHECK(std::isfinite(p));
            }
        }
    }
}

TEST_CASE("frequency and dft are invariant under bit complement") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        const BitStream s = random_stream(5000, seed);
        const BitStream c = complement(s);
        CHECK(sts::frequency_test(s).p_values[0] ==
              doctest::Approx(sts::frequency_test(c).p_values[0]).epsilon(1e-12));
        CHECK(sts::dft_test(s).p_values[0] ==
              doctest::Approx(sts::dft_test(c).p_values[0]).epsilon(1e-9));
    }
}

TEST_CASE("cusum backward equals forward of the reversed stream") {
    for (std::uint64_t seed : {21ull, 22ull, 23ull}) {
        const BitStream s = random_stream(4000, seed);
        const sts::TestResult a = sts::cumulative_sums_test(s);
        const sts::TestResult b = sts::cumulative_sums_test(reversed(s));
        REQUIRE(a.applicable);
        // forward(s) == backward(reverse(s)) and vice versa
        CHECK(a.p_values[0] == doctest::Approx(b.p_values[1]).epsilon(1e-12));
        CHECK(a.p_values[1] == doctest::Approx(b.p_values[0]).epsilon(1e-12));
    }
}

namespace {

// O(n^2) reference DFT.
std::vector<std::complex<double>> direct_dft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc = 0;
        for (std::size_t t = 0; t < n; ++t) {
            const double ang = -2.0 * std::numbers::pi * double(k) * double(t) / double(n);
            acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
    return out;
}

}  // namespace

TEST_CASE("bluestein transform matches the direct DFT") {
    std::mt19937_64 rng(99);
    for (std::size_t n : {1ul, 2ul, 3ul, 5ul, 64ul, 100ul, 1000ul, 4096ul}) {
        std::vector<double> x(n);
        for (double& v : x) v = (rng() & 1) ? 1.0 : -1.0;
        const sts::BluesteinFft plan(n);
        const auto fast = plan.transform(x);
        const auto slow = direct_dft(x);
        REQUIRE(fast.size() == n);
        double ref_norm = 0.0, err_norm = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            ref_norm += std::norm(slow[k]);
            err_norm += std::norm(fast[k] - slow[k]);
        }
        CHECK(std::sqrt(err_norm) <= 1e-6 * std::sqrt(ref_norm) + 1e-9);
    }
}

TEST_CASE("berlekamp_massey recovers a planted LFSR exactly") {
    std::mt19937_64 rng(7);
    for (std::size_t L = 1; L <= 64; ++L) {
        // random connection polynomial of degree exactly L, random nonzero fill
        std::vector<std::uint8_t> taps(L);
        for (auto& t : taps) t = rng() & 1;
        taps[L - 1] = 1;  // force degree L
        std::vector<std::uint8_t> s(2 * L + 16);
        bool nonzero = false;
        for (std::size_t i = 0; i < L; ++i) {
            s[i] = rng() & 1;
            nonzero |= s[i];
        }
        if (!nonzero) s[0] = 1;
        for (std::size_t i = L; i < s.size(); ++i) {
            std::uint8_t b = 0;
            for (std::size_t j = 0; j < L; ++j) b ^= std::uint8_t(taps[j] & s[i - 1 - j]);
            s[i] = b;
        }
        const std::size_t got = sts::berlekamp_massey(s);
        CHECK(got <= L);
        CHECK(got == oracles::naive_berlekamp_massey(s));
    }
}

TEST_CASE("berlekamp_massey agrees with the naive oracle on random blocks") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 700;
        std::vector<std::uint8_t> s(n);
        for (auto& b : s) b = rng() & 1;
        CHECK(sts::berlekamp_massey(s) == oracles::naive_berlekamp_massey(s));
    }
    // fully zero and nearly-zero edge cases
    std::vector<std::uint8_t> z(500, 0);
    CHECK(sts::berlekamp_massey(z) == 0);
    z[499] = 1;  // single trailing 1 => L = n
    CHECK(sts::berlekamp_massey(z) == 500);
    CHECK(oracles::naive_berlekamp_massey(z) == 500);
}

TEST_CASE("aperiodic template enumeration") {
    const auto t9 = sts::aperiodic_templates(9);
    CHECK(t9.size() == 148);
    // every template is unbordered: no proper prefix equals the same-length suffix
    for (const auto& tpl : t9) {
        REQUIRE(tpl.size() == 9);
        for (std::size_t s = 1; s < 9; ++s) {
            bool border = true;
            for (std::size_t i = 0; i < 9 - s; ++i)
                if (tpl[i] != tpl[i + s]) { border = false; break; }
            CHECK(!border);
        }
    }
    // ascending numeric order, no duplicates
    auto value = [](const std::vector<std::uint8_t>& t) {
        unsigned v = 0;
        for (std::uint8_t b : t) v = (v << 1) | b;
        return v;
    };
    for (std::size_t i = 1; i < t9.size(); ++i)
        CHECK(value(t9[i - 1]) < value(t9[i]));
    // small-m counts: 2, 4, 6, 12, 20, 40, 74 for m = 2..8 (unbordered strings)
    CHECK(sts::aperiodic_templates(2).size() == 2);
    CHECK(sts::aperiodic_templates(3).size() == 4);
    CHECK(sts::aperiodic_templates(4).size() == 6);
    CHECK(sts::aperiodic_templates(5).size() == 12);
    CHECK(sts::aperiodic_templates(6).size() == 20);
    CHECK(sts::aperiodic_templates(7).size() == 40);
    CHECK(sts::aperiodic_templates(8).size() == 74);
}

TEST_CASE("shipped template list matches the generated enumeration") {
    std::ifstream in(SHIPPED_DATA_DIR "/templates_m9.txt");
    REQUIRE(in.good());
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    const auto generated = sts::aperiodic_templates(9);
    REQUIRE(lines.size() == generated.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string s;
        for (std::uint8_t b : generated[i]) s += char('0' + b);
        CHECK(lines[i] == s);
    }
}

TEST_CASE("suite streams: deterministic and thread-count independent") {
    std::vector<BitStream> streams;
    for (std::uint64_t i = 0; i < 6; ++i) streams.push_back(random_stream(20000, 100 + i));
    const sts::SuiteReport serial_run = sts::run_suite_streams(streams, 0.01, 1);
    const sts::SuiteReport parallel_run = sts::run_suite_streams(streams, 0.01, 4);
    REQUIRE(serial_run.families.size() == parallel_run.families.size());
    CHECK(serial_run.to_json() == parallel_run.to_json());
    CHECK(serial_run.average_passing_rate() ==
          doctest::Approx(parallel_run.average_passing_rate()));
}
