// Bit generators: the dynamical logistic-map PRNG and the comparison
// baselines, all behind a common BitSource contract.

#ifndef BDPRNG_GENERATORS_HPP
#define BDPRNG_GENERATORS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bdprng/bitstream.hpp"
#include "bdprng/fxp.hpp"
#include "bdprng/maps.hpp"

namespace bdprng {

// splitmix64 output permutation; steps the state and returns one draw.
std::uint64_t splitmix64_next(std::uint64_t& state);

// First nonzero `bits`-wide splitmix64 draw from the master; the documented
// seed path for the LFSR and LCG baselines.
std::uint64_t derive_nonzero_word(std::uint64_t master, std::uint32_t bits);

// Minimal-standard style LCG on 31 bits: state' = (1103515245*state + 12345) mod 2^31.
// Full period for these constants (Hull-Dobbell on modulus 2^31).
class PartitionLcg {
public:
    explicit PartitionLcg(std::uint32_t seed);
    std::uint32_t next();
    std::uint32_t state() const { return state_; }

    // k = k_min + ((next() >> 16) mod span); high bits avoid low-bit artifacts.
    std::uint32_t draw_k(std::uint32_t k_min, std::uint32_t k_max);

private:
    std::uint32_t state_;
};

// Full seed of the dynamical generator.
struct SeedConfig {
    std::uint32_t word_length = 32;
    FxWord x0;
    std::vector<FxWord> gammas;
    std::uint32_t k_min = 9;
    std::uint32_t k_max = 11;
    std::uint32_t partition_seed = 0;

    std::size_t m() const { return gammas.size(); }
    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    std::string to_json() const;
    static SeedConfig from_json(const std::string& text);
};

// Deterministic seed expansion from a 64-bit master through splitmix64:
// x0 = first nonzero n-bit draw, then m gammas uniform over the chaotic range,
// then the first nonzero 31-bit draw as partition seed.
SeedConfig derive_seed(std::uint64_t master, std::uint32_t n, std::uint32_t m = 8,
                       std::uint32_t k_min = 9, std::uint32_t k_max = 11);

// Common contract: a deterministic bit stream, resettable to its seed.
class BitSource {
public:
    virtual ~BitSource() = default;
    virtual bool next_bit() = 0;
    virtual void reset() = 0;
    virtual std::string name() const = 0;
};

BitStream fill_bits(BitSource& source, std::size_t count);

// The bitwise dynamical PRNG: logistic map with rotating gammas, each held for
// a freshly drawn k in [k_min, k_max]; output is the LSB of each state word.
class DynamicalGenerator final : public BitSource {
public:
    explicit DynamicalGenerator(SeedConfig config);

    // Advances the map once and returns the new state word.
    FxWord next_element();
    bool next_bit() override { return next_element().raw & 1; }
    void reset() override;
    std::string name() const override { return "dynamical"; }

    const SeedConfig& config() const { return config_; }
    std::size_t gamma_index() const { return gamma_index_; }
    // Set once the state word hits the absorbing zero fixed point.
    bool zero_absorbed() const { return zero_absorbed_; }

private:
    SeedConfig config_;
    FxWord x_;
    std::size_t gamma_index_ = 0;
    std::uint32_t remaining_ = 0;
    PartitionLcg lcg_;
    bool zero_absorbed_ = false;
};

// Raw logistic map with a single fixed gamma; LSB output. Comparison
// baselines at word lengths 32 and 64.
class RawLogisticGenerator final : public BitSource {
public:
    RawLogisticGenerator(std::uint32_t n, std::uint64_t x0_raw, std::uint64_t gamma_raw);

    FxWord next_element();
    bool next_bit() override { return next_element().raw & 1; }
    void reset() override;
    std::string name() const override { return "logistic" + std::to_string(n_); }

    bool zero_absorbed() const { return x_.raw == 0; }

private:
    std::uint32_t n_;
    FxWord seed_x_;
    FxWord gamma_;
    FxWord x_;
};

// 32-bit Fibonacci LFSR, feedback polynomial x^32 + x^22 + x^2 + x + 1
// (taps 32, 22, 2, 1; maximal length 2^32 - 1).
class Lfsr32 final : public BitSource {
public:
    explicit Lfsr32(std::uint32_t seed);

    bool next_bit() override;
    void reset() override;
    std::string name() const override { return "lfsr32"; }
    std::uint32_t state() const { return state_; }

private:
    std::uint32_t seed_;
    std::uint32_t state_;
};

// glibc-style LCG baseline. Each step produces a 31-bit state word; the
// extraction mode selects which of its bits feed the output stream. Lsb is
// the default: it mirrors the LSB extraction used by the chaotic generators
// and is the only mode that reproduces the published failure signature —
// all31 turns out to pass every battery family except the spectral test.
enum class LcgExtraction { All31, Lsb, Bit30 };

LcgExtraction parse_extraction(const std::string& text);
std::string extraction_name(LcgExtraction mode);

class GlibcLcg final : public BitSource {
public:
    GlibcLcg(std::uint32_t seed, LcgExtraction mode = LcgExtraction::Lsb);

    bool next_bit() override;
    void reset() override;
    std::string name() const override { return "glibc-lcg-" + extraction_name(mode_); }

private:
    std::uint32_t seed_;
    LcgExtraction mode_;
    PartitionLcg lcg_;
    std::uint32_t buffer_ = 0;
    std::uint32_t buffered_ = 0;
};

}  // namespace bdprng

#endif
